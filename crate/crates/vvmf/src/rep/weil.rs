//! The 2m-dimensional representation acting on theta components of index-m
//! Jacobi forms: diagonal on T, discrete-Fourier on S, built from the
//! double-cover action twisted by the eta multiplier so that it descends to a
//! genuine representation of SL2(Z).

use super::cmat::CMat;
use super::multiplier::MultiplierSystem;
use super::representation::{MinusIdentityAction, Representation};
use crate::error::{Error, Result};
use crate::Complex;
use std::f64::consts::PI;

/// Double-cover T-image: e_j -> e^{-2 pi i j^2/(4m)} e_j, j = 1..2m.
pub fn weil_t_tilde(m: u32) -> CMat {
    let dim = 2 * m as usize;
    let mut t = CMat::zeros(dim);
    for j in 1..=dim {
        let phase = -2.0 * PI * (j * j) as f64 / (4.0 * m as f64);
        t[(j - 1, j - 1)] = Complex::new(phase.cos(), phase.sin());
    }
    t
}

/// Double-cover S-image: e_j -> (i^{1/2}/sqrt(2m)) sum_{j'} e^{2 pi i j j'/(2m)} e_{j'}.
pub fn weil_s_tilde(m: u32) -> CMat {
    let dim = 2 * m as usize;
    let mut s = CMat::zeros(dim);
    let scale = 1.0 / (dim as f64).sqrt();
    let eighth = Complex::new((PI / 4.0).cos(), (PI / 4.0).sin());
    for j in 1..=dim {
        for jp in 1..=dim {
            let phase = 2.0 * PI * (j * jp) as f64 / (2.0 * m as f64);
            s[(jp - 1, j - 1)] = eighth * scale * Complex::new(phase.cos(), phase.sin());
        }
    }
    s
}

/// The SL2(Z) representation rho_m = chi rho~_m (principal lift), together
/// with the conjugated weight-1/2 multiplier it is paired with on theta
/// components. rho_m(-I) is the index flip e_j -> e_{2m-j}.
pub fn weil_rep(m: u32) -> Result<(Representation, MultiplierSystem)> {
    if m == 0 {
        return Err(Error::domain("index m must be >= 1"));
    }
    let chi = MultiplierSystem::eta_power(1);
    let chi_t = Complex::new((PI / 12.0).cos(), (PI / 12.0).sin());
    let chi_s = Complex::new((PI / 4.0).cos(), -(PI / 4.0).sin());
    let t = weil_t_tilde(m).scale(chi_t);
    let s = weil_s_tilde(m).scale(chi_s);
    let rho = Representation::new(t, s, MinusIdentityAction::JacobiFlip)?;
    Ok((rho, MultiplierSystem::conjugate(chi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgroup::UnimodularMatrix;
    use crate::rep::extract_kappas;

    #[test]
    fn index_one_images() {
        let (rho, _) = weil_rep(1).unwrap();
        // rho~_1(T~) = diag(-i, 1); the SL2 image carries the extra e^{i pi/12}.
        let t = weil_t_tilde(1);
        assert!((t[(0, 0)] - Complex::new(0.0, -1.0)).norm() < 1e-14);
        assert!((t[(1, 1)] - Complex::new(1.0, 0.0)).norm() < 1e-14);
        // rho~_1(S~) = (e^{i pi/4}/sqrt 2) [[-1, 1], [1, 1]].
        let s = weil_s_tilde(1);
        let f = Complex::new((PI / 4.0).cos(), (PI / 4.0).sin()) / 2.0f64.sqrt();
        assert!((s[(0, 0)] + f).norm() < 1e-13);
        assert!((s[(0, 1)] - f).norm() < 1e-13);
        assert!((s[(1, 0)] - f).norm() < 1e-13);
        assert!((s[(1, 1)] - f).norm() < 1e-13);
        // The twisted S-image is real.
        let rs = rho.s_image();
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        assert!((rs[(0, 0)] - Complex::new(-inv_sqrt2, 0.0)).norm() < 1e-13);
        assert!((rs[(0, 1)] - Complex::new(inv_sqrt2, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn unitarity_tight() {
        for m in [1u32, 2, 3, 5] {
            assert!(weil_t_tilde(m).unitarity_defect() < 1e-14);
            assert!(weil_s_tilde(m).unitarity_defect() < 1e-14);
        }
    }

    #[test]
    fn bridge_kappas_index_one() {
        let (rho, chi_bar) = weil_rep(1).unwrap();
        let kappas = extract_kappas(&chi_bar, &rho).unwrap();
        assert!((kappas[0] - 0.75).abs() < 1e-12, "kappa_1 = {}", kappas[0]);
        assert!(kappas[1].abs() < 1e-12, "kappa_2 = {}", kappas[1]);
    }

    #[test]
    fn kappas_general_index() {
        for m in [2u32, 3] {
            let (rho, chi_bar) = weil_rep(m).unwrap();
            let kappas = extract_kappas(&chi_bar, &rho).unwrap();
            for (idx, kappa) in kappas.iter().enumerate() {
                let j = idx as i64 + 1;
                let want = ((4 * m as i64 - (j * j).rem_euclid(4 * m as i64))
                    .rem_euclid(4 * m as i64)) as f64
                    / (4.0 * m as f64);
                assert!((kappa - want).abs() < 1e-11, "m={m}, j={j}: {kappa} vs {want}");
            }
        }
    }

    #[test]
    fn flip_action_on_minus_identity() {
        for m in [1u32, 2, 3] {
            let (rho, _) = weil_rep(m).unwrap();
            let minus = rho.eval(&UnimodularMatrix::identity().neg());
            let dim = 2 * m as usize;
            for j in 1..=dim {
                let target = if j == dim { dim } else { dim - j };
                assert!(
                    (minus[(target - 1, j - 1)] - Complex::new(1.0, 0.0)).norm() < 1e-12,
                    "m={m}: -I image is not the flip"
                );
            }
        }
    }
}
