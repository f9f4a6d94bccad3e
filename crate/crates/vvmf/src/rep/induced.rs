//! Permutation representation induced by the right-coset action of SL2(Z) on
//! Gamma_0(N) \ SL2(Z).

use super::cmat::CMat;
use super::representation::{MinusIdentityAction, Representation};
use crate::error::{Error, Result};
use crate::modgroup::{coset_representatives, UnimodularMatrix};
use crate::Complex;

/// Index of the coset containing gamma, by the P^1(Z/N) class of its bottom row.
fn coset_index(reps: &[UnimodularMatrix], n: i64, gamma: &UnimodularMatrix) -> Result<usize> {
    for (i, r) in reps.iter().enumerate() {
        // Same coset iff c1 d2 == c2 d1 (mod N).
        let cross = r.c as i128 * gamma.d as i128 - gamma.c as i128 * r.d as i128;
        if cross.rem_euclid(n as i128) == 0 {
            return Ok(i);
        }
    }
    Err(Error::validation(format!("no coset found for {gamma} at level {n}")))
}

/// The permutation matrix rho(gamma) defined by gamma_i gamma in
/// Gamma_0(N) gamma_{sigma(i)}: rho(gamma)_{i, sigma(i)} = 1, so that the
/// induced vector f~ satisfies f~(gamma tau) = (c tau + d)^k rho(gamma) f~(tau).
fn permutation_image(
    reps: &[UnimodularMatrix],
    n: i64,
    gamma: &UnimodularMatrix,
) -> Result<CMat> {
    let dim = reps.len();
    let mut m = CMat::zeros(dim);
    for (i, r) in reps.iter().enumerate() {
        let sigma_i = coset_index(reps, n, &r.mul(gamma))?;
        m[(i, sigma_i)] = Complex::new(1.0, 0.0);
    }
    Ok(m)
}

/// Build the induced permutation representation for Gamma_0(N).
pub fn induced_permutation_rep(n: u32) -> Result<Representation> {
    if n == 0 {
        return Err(Error::domain("level N must be >= 1"));
    }
    let reps = coset_representatives(n)?;
    let nn = n as i64;
    let t = permutation_image(&reps, nn, &UnimodularMatrix::t_pow(1))?;
    let s = permutation_image(&reps, nn, &UnimodularMatrix::s())?;
    Representation::new(t, s, MinusIdentityAction::Identity)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_one_is_trivial() {
        let rho = induced_permutation_rep(1).unwrap();
        assert_eq!(rho.dim(), 1);
    }

    #[test]
    fn level_two_structure() {
        let rho = induced_permutation_rep(2).unwrap();
        assert_eq!(rho.dim(), 3);
        // T fixes the identity-coset index.
        let t = rho.t_image();
        assert!((t[(0, 0)] - Complex::new(1.0, 0.0)).norm() < 1e-14);
        // rho(S) rho(S) = rho(-I) = Id.
        let s2 = rho.s_image().mul(rho.s_image());
        assert!(s2.max_entry_diff(&CMat::identity(3)) < 1e-14);
    }

    #[test]
    fn identity_on_normal_core_elements() {
        // Elements of Gamma(N) act trivially on the cosets.
        for n in [2u32, 4] {
            let rho = induced_permutation_rep(n).unwrap();
            let nn = n as i64;
            let samples = [
                UnimodularMatrix::new(1, 0, nn, 1).unwrap(),
                UnimodularMatrix::t_pow(nn),
                UnimodularMatrix::new(1, nn, nn, nn * nn + 1).unwrap(),
            ];
            for g in samples {
                let m = rho.eval(&g);
                assert!(
                    m.max_entry_diff(&CMat::identity(rho.dim())) < 1e-12,
                    "rho({g}) != Id at level {n}"
                );
            }
        }
    }

    #[test]
    fn gamma0_elements_fix_identity_coset() {
        let rho = induced_permutation_rep(6).unwrap();
        for g in [
            UnimodularMatrix::new(1, 0, 6, 1).unwrap(),
            UnimodularMatrix::new(5, 2, 12, 5).unwrap(),
            UnimodularMatrix::new(7, 3, 30, 13).unwrap(),
        ] {
            let m = rho.eval(&g);
            assert!(
                (m[(0, 0)] - Complex::new(1.0, 0.0)).norm() < 1e-12,
                "identity coset moved by {g}"
            );
        }
    }
}
