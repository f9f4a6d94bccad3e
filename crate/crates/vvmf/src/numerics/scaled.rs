//! Log-scaled complex values for overflow-safe gamma-factor products.

use crate::Complex;
use std::f64::consts::PI;

/// A complex value stored as (log magnitude, phase), so that products like
/// Gamma(s) Gamma(k-s) survive weights k >> 1 without overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexScaled {
    /// Natural log of the modulus; -inf encodes an exact zero.
    pub log_magnitude: f64,
    /// Phase in (-pi, pi].
    pub phase: f64,
}

fn normalize_phase(mut p: f64) -> f64 {
    if !p.is_finite() {
        return 0.0;
    }
    p = p.rem_euclid(2.0 * PI);
    if p > PI {
        p -= 2.0 * PI;
    }
    p
}

impl ComplexScaled {
    pub fn zero() -> Self {
        ComplexScaled {
            log_magnitude: f64::NEG_INFINITY,
            phase: 0.0,
        }
    }

    pub fn one() -> Self {
        ComplexScaled {
            log_magnitude: 0.0,
            phase: 0.0,
        }
    }

    pub fn new(log_magnitude: f64, phase: f64) -> Self {
        ComplexScaled {
            log_magnitude,
            phase: normalize_phase(phase),
        }
    }

    pub fn from_complex(z: Complex) -> Self {
        if z.re == 0.0 && z.im == 0.0 {
            return Self::zero();
        }
        ComplexScaled {
            log_magnitude: z.norm().ln(),
            phase: z.arg(),
        }
    }

    /// Build from a complex logarithm: value = exp(log).
    pub fn from_log(log: Complex) -> Self {
        ComplexScaled {
            log_magnitude: log.re,
            phase: normalize_phase(log.im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.log_magnitude == f64::NEG_INFINITY
    }

    /// Exponentiate back to a plain complex value. Overflows to infinity and
    /// underflows to zero, as dictated by the stored log magnitude.
    pub fn to_complex(&self) -> Complex {
        if self.is_zero() {
            return Complex::new(0.0, 0.0);
        }
        let mag = self.log_magnitude.exp();
        let (sin, cos) = self.phase.sin_cos();
        Complex::new(mag * cos, mag * sin)
    }

    pub fn mul(&self, other: &ComplexScaled) -> ComplexScaled {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        ComplexScaled::new(
            self.log_magnitude + other.log_magnitude,
            self.phase + other.phase,
        )
    }

    pub fn div(&self, other: &ComplexScaled) -> ComplexScaled {
        if self.is_zero() {
            return Self::zero();
        }
        ComplexScaled::new(
            self.log_magnitude - other.log_magnitude,
            self.phase - other.phase,
        )
    }

    pub fn mul_complex(&self, z: Complex) -> ComplexScaled {
        self.mul(&ComplexScaled::from_complex(z))
    }

    pub fn abs(&self) -> f64 {
        self.log_magnitude.exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_products() {
        let z = Complex::new(-3.0, 4.0);
        let s = ComplexScaled::from_complex(z);
        assert!((s.to_complex() - z).norm() < 1e-13);

        let w = Complex::new(0.5, -0.25);
        let p = s.mul(&ComplexScaled::from_complex(w)).to_complex();
        assert!((p - z * w).norm() < 1e-12);
    }

    #[test]
    fn survives_huge_products() {
        // Two factors each of magnitude e^500 whose ratio is finite.
        let a = ComplexScaled::new(500.0, 1.0);
        let b = ComplexScaled::new(500.0, -1.0);
        let q = a.div(&b);
        assert!((q.to_complex() - Complex::new((2.0f64).cos(), (2.0f64).sin())).norm() < 1e-12);
    }

    #[test]
    fn phase_normalized() {
        let s = ComplexScaled::new(0.0, 7.0 * PI / 2.0);
        assert!(s.phase <= PI && s.phase > -PI);
        assert!((s.phase - (-PI / 2.0)).abs() < 1e-14);
    }
}
