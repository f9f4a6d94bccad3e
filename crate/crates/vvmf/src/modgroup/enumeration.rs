//! Enumeration of matrices (a, b; c, d) with ad - bc = 1 and ac > 0, grouped
//! by bottom row (c, d) with completions (a, b) ranging over a + tc.
//!
//! The d-range is switchable: one representative per residue class mod |c|
//! (the convergent reading of the lattice sum) or a free window (kept for
//! comparison; the kernel oracle shows it double-counts orbits).

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

/// Extended gcd: returns (g, x, y) with a x + b y = g.
fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// How the canonical completion a is chosen for a bottom row (c, d).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionRule {
    /// a is the representative of d^{-1} mod |c| in (-|c|/2, |c|/2], shifted
    /// by c if needed to force ac > 0.
    MinResidue,
}

/// Range of the d coordinate for each c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DDomain {
    /// One representative per residue class mod |c|, taken in (-|c|/2, |c|/2].
    ResidueSystem,
    /// Every coprime d with |d| <= bound (kept only to demonstrate that this
    /// reading of the sum fails to converge).
    FreeWithin(i64),
}

/// Enumeration bounds and conventions for the ac > 0 matrix family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoprimePairEnumeration {
    pub c_max: i64,
    pub a_max: i64,
    pub completion: CompletionRule,
    pub d_domain: DDomain,
}

impl CoprimePairEnumeration {
    pub fn new(c_max: i64, a_max: i64) -> Result<Self> {
        if c_max < 1 || a_max < 1 {
            return Err(Error::domain("enumeration bounds must be >= 1"));
        }
        Ok(CoprimePairEnumeration {
            c_max,
            a_max,
            completion: CompletionRule::MinResidue,
            d_domain: DDomain::ResidueSystem,
        })
    }

    pub fn with_d_domain(mut self, d: DDomain) -> Self {
        self.d_domain = d;
        self
    }

    /// Stream the matrices in deterministic order: by |c|, then sign of c,
    /// then d, then a.
    pub fn iter(&self) -> impl Iterator<Item = UnimodularMatrix> + '_ {
        let mut out: Vec<UnimodularMatrix> = Vec::new();
        for abs_c in 1..=self.c_max {
            for c in [abs_c, -abs_c] {
                let ds: Vec<i64> = match self.d_domain {
                    DDomain::ResidueSystem => {
                        // (-|c|/2, |c|/2] representatives coprime to c.
                        let half = abs_c / 2;
                        let start = -half + (abs_c % 2 == 0) as i64;
                        (start..=half).filter(|d| gcd(*d, c) == 1).collect()
                    }
                    DDomain::FreeWithin(bound) => {
                        (-bound..=bound).filter(|d| gcd(*d, c) == 1).collect()
                    }
                };
                for d in ds {
                    for m in self.completions(c, d) {
                        out.push(m);
                    }
                }
            }
        }
        out.into_iter()
    }

    /// All completions (a, b) of the bottom row (c, d) with ad == 1 (mod c),
    /// b = (ad - 1)/c, ac > 0, |a| <= a_max, in ascending a.
    fn completions(&self, c: i64, d: i64) -> Vec<UnimodularMatrix> {
        let abs_c = c.abs();
        // Base solution of a d == 1 (mod |c|); the class representative in [0, |c|).
        let (_, x, _) = egcd(d.rem_euclid(abs_c), abs_c);
        let r = x.rem_euclid(abs_c);

        let mut out = Vec::new();
        let mut push = |a: i64| {
            let b = (a as i128 * d as i128 - 1) / c as i128;
            if let Ok(b) = i64::try_from(b) {
                out.push(UnimodularMatrix { a, b, c, d });
            }
        };
        if c > 0 {
            let mut a = if r == 0 { abs_c } else { r };
            while a <= self.a_max {
                push(a);
                a += abs_c;
            }
        } else {
            let mut a = if r == 0 { -abs_c } else { r - abs_c };
            while a >= -self.a_max {
                push(a);
                a -= abs_c;
            }
            out.reverse();
        }
        out
    }
}
