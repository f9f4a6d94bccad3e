//! Truncated Fourier expansions of vector-valued forms.

use crate::error::{Error, Result};
use crate::Complex;
use std::collections::BTreeMap;

/// One component's expansion: coefficients a(n) attached to exponents
/// n/den + kappa, n a non-negative integer key. den = 1 is the ordinary
/// integer-step case; den = w carries expansions in q^{1/w} (needed for
/// components induced from level N > 1, whose exponents live on a finer grid).
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub kappa_num: i64,
    pub kappa_den: i64,
    pub den: i64,
    pub coeffs: BTreeMap<i64, Complex>,
}

impl Component {
    pub fn new(kappa_num: i64, kappa_den: i64, den: i64) -> Result<Self> {
        if kappa_den <= 0 || den <= 0 {
            return Err(Error::domain("kappa denominator and step denominator must be positive"));
        }
        if kappa_num < 0 || kappa_num >= kappa_den {
            return Err(Error::domain("kappa must lie in [0, 1)"));
        }
        Ok(Component {
            kappa_num,
            kappa_den,
            den,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa_num as f64 / self.kappa_den as f64
    }

    /// The real exponent attached to key n.
    pub fn exponent(&self, n: i64) -> f64 {
        n as f64 / self.den as f64 + self.kappa()
    }

    /// Insert a coefficient, enforcing the cusp condition exponent > 0.
    pub fn insert(&mut self, n: i64, value: Complex) -> Result<()> {
        if self.exponent(n) <= 0.0 {
            return Err(Error::validation(format!(
                "coefficient at non-positive exponent {} violates the cusp condition",
                self.exponent(n)
            )));
        }
        if value.norm() != 0.0 {
            self.coeffs.insert(n, value);
        }
        Ok(())
    }

    pub fn smallest_exponent(&self) -> Option<f64> {
        self.coeffs.keys().next().map(|n| self.exponent(*n))
    }
}

/// All components of a form, truncated at key n_max (on each component's grid).
#[derive(Debug, Clone, PartialEq)]
pub struct FourierExpansion {
    pub components: Vec<Component>,
    pub n_max: i64,
}

impl FourierExpansion {
    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    /// Smallest positive exponent across components (decay rate of the form).
    pub fn min_exponent(&self) -> f64 {
        self.components
            .iter()
            .filter_map(|c| c.smallest_exponent())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn kappas(&self) -> Vec<f64> {
        self.components.iter().map(|c| c.kappa()).collect()
    }

    /// Fit the growth constant G with |a(n)| <= G * x^{power} over stored
    /// coefficients with exponent x, and check that no late coefficient
    /// breaks the fitted envelope by more than the given slack factor.
    pub fn growth_check(&self, power: f64, slack: f64) -> Result<f64> {
        let mut ratios: Vec<(f64, f64)> = Vec::new();
        for c in &self.components {
            for (n, a) in &c.coeffs {
                let x = c.exponent(*n).max(1e-9);
                ratios.push((x, a.norm() / x.powf(power)));
            }
        }
        if ratios.len() < 4 {
            return Ok(ratios.iter().map(|r| r.1).fold(0.0, f64::max));
        }
        ratios.sort_by(|p, q| p.0.total_cmp(&q.0));
        let head = &ratios[..ratios.len() / 2];
        let g = head.iter().map(|r| r.1).fold(0.0, f64::max).max(1e-300);
        for (x, r) in &ratios[ratios.len() / 2..] {
            if *r > g * slack {
                return Err(Error::validation(format!(
                    "coefficient at exponent {x} exceeds the growth envelope: ratio {r:.3e} vs fitted {g:.3e}"
                )));
            }
        }
        Ok(g)
    }
}
