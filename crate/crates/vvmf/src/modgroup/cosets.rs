//! Right-coset representatives of Gamma_0(N) in SL2(Z).

use super::UnimodularMatrix;
use crate::error::{Error, Result};

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Representatives of Gamma_0(N) \ SL2(Z), the first being the identity.
/// Cosets are classified by the bottom row (c : d) in P^1(Z/N); two matrices
/// lie in the same coset exactly when c1 d2 == c2 d1 (mod N).
pub fn coset_representatives(n: u32) -> Result<Vec<UnimodularMatrix>> {
    if n == 0 {
        return Err(Error::domain("level N must be >= 1"));
    }
    let n = n as i64;
    if n == 1 {
        return Ok(vec![UnimodularMatrix::identity()]);
    }

    // Collect P^1(Z/N) classes by a canonical key: the lexicographically
    // smallest unit multiple of (c, d) mod N.
    let mut classes: Vec<(i64, i64)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let units: Vec<i64> = (1..n).filter(|u| gcd(*u, n) == 1).collect();
    for c in 0..n {
        for d in 0..n {
            if gcd(gcd(c, d), n) != 1 {
                continue;
            }
            let key = units
                .iter()
                .map(|u| ((u * c).rem_euclid(n), (u * d).rem_euclid(n)))
                .min()
                .unwrap();
            if seen.insert(key) {
                classes.push((c, d));
            }
        }
    }
    // Put the identity class (0 : 1) first.
    classes.sort_by_key(|&(c, d)| {
        let is_identity = c.rem_euclid(n) == 0;
        (!is_identity, c, d)
    });

    let mut reps = Vec::with_capacity(classes.len());
    for (c0, d0) in classes {
        reps.push(lift_class(c0, d0, n)?);
    }
    Ok(reps)
}

/// Lift a P^1(Z/N) class (c0 : d0) to an actual SL2(Z) matrix whose bottom
/// row reduces to it.
fn lift_class(c0: i64, d0: i64, n: i64) -> Result<UnimodularMatrix> {
    if c0.rem_euclid(n) == 0 {
        return Ok(UnimodularMatrix::identity());
    }
    // Find d == d0 (mod N) with gcd(c0, d) = 1 (exists since gcd(c0,d0,N)=1).
    let c = c0;
    let mut d = d0;
    for _ in 0..=c.abs() + n {
        if gcd(c, d) == 1 {
            // Complete to determinant one by the extended Euclid identity.
            let (x, y) = bezout(c, d);
            // c*x + d*y = 1  =>  det [y, -x; c, d] = y d + x c = 1.
            return UnimodularMatrix::new(y, -x, c, d);
        }
        d += n;
    }
    Err(Error::validation(format!(
        "could not lift projective class ({c0} : {d0}) mod {n}"
    )))
}

/// (x, y) with c x + d y = 1 for coprime (c, d).
fn bezout(c: i64, d: i64) -> (i64, i64) {
    fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
        if b == 0 {
            (a, 1, 0)
        } else {
            let (g, x, y) = egcd(b, a.rem_euclid(b));
            (g, y, x - a.div_euclid(b) * y)
        }
    }
    let (g, x, y) = egcd(c, d);
    debug_assert_eq!(g.abs(), 1);
    (x * g.signum(), y * g.signum())
}

/// Index of Gamma_0(N): N prod_{p | N} (1 + 1/p).
pub fn gamma0_index(n: u32) -> u64 {
    let mut idx = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            idx = idx / p * (p + 1);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        idx = idx / m * (m + 1);
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_counts() {
        for (n, want) in [(1u32, 1usize), (2, 3), (3, 4), (4, 6), (6, 12), (12, 24)] {
            let reps = coset_representatives(n).unwrap();
            assert_eq!(reps.len(), want, "N = {n}");
            assert_eq!(gamma0_index(n) as usize, want, "index formula N = {n}");
            assert_eq!(reps[0], UnimodularMatrix::identity());
        }
    }

    #[test]
    fn pairwise_distinct_cosets() {
        for n in [2u32, 4, 6, 10] {
            let reps = coset_representatives(n).unwrap();
            for (i, gi) in reps.iter().enumerate() {
                for (j, gj) in reps.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let q = gi.mul(&gj.inverse());
                    assert!(
                        q.c.rem_euclid(n as i64) != 0,
                        "representatives {i} and {j} share a coset at N = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_level_zero() {
        assert!(coset_representatives(0).is_err());
    }
}
