//! Integer 2x2 matrices of determinant one and the hyperbolic action.

use crate::error::{Error, Result};
use crate::Complex;

/// An element of SL2(Z). All products use 128-bit intermediates and panic on
/// overflow of the stored 64-bit entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UnimodularMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(Error::validation(format!(
                "matrix [{a},{b};{c},{d}] has determinant {det}, not 1"
            )));
        }
        Ok(UnimodularMatrix { a, b, c, d })
    }

    pub fn identity() -> Self {
        UnimodularMatrix { a: 1, b: 0, c: 0, d: 1 }
    }

    /// S = [0,-1;1,0]
    pub fn s() -> Self {
        UnimodularMatrix { a: 0, b: -1, c: 1, d: 0 }
    }

    /// T^n = [1,n;0,1]
    pub fn t_pow(n: i64) -> Self {
        UnimodularMatrix { a: 1, b: n, c: 0, d: 1 }
    }

    pub fn neg(&self) -> Self {
        UnimodularMatrix { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn mul(&self, other: &UnimodularMatrix) -> Self {
        let prod = |x: i64, y: i64, z: i64, w: i64| -> i64 {
            let v = x as i128 * y as i128 + z as i128 * w as i128;
            i64::try_from(v).expect("matrix entry overflow")
        };
        UnimodularMatrix {
            a: prod(self.a, other.a, self.b, other.c),
            b: prod(self.a, other.b, self.b, other.d),
            c: prod(self.c, other.a, self.d, other.c),
            d: prod(self.c, other.b, self.d, other.d),
        }
    }

    pub fn inverse(&self) -> Self {
        UnimodularMatrix { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Moebius action on the upper half-plane.
    pub fn act(&self, tau: Complex) -> Complex {
        let num = tau * self.a as f64 + self.b as f64;
        let den = tau * self.c as f64 + self.d as f64;
        num / den
    }

    /// c tau + d.
    pub fn automorphy_denominator(&self, tau: Complex) -> Complex {
        tau * self.c as f64 + self.d as f64
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs())
    }
}

impl std::fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}

/// Move tau into the standard fundamental domain; returns (reduced point,
/// gamma) with gamma * tau = reduced point. Boundary ties go to Re = -1/2 and
/// to the |tau| = 1 arc with Re <= 0.
pub fn reduce_to_fundamental_domain(tau: Complex) -> Result<(Complex, UnimodularMatrix)> {
    if tau.im <= 0.0 {
        return Err(Error::domain("fundamental-domain reduction needs Im tau > 0"));
    }
    const EPS: f64 = 1e-12;
    let mut z = tau;
    let mut g = UnimodularMatrix::identity();
    for _ in 0..10_000 {
        let n = z.re.round();
        if n != 0.0 {
            z -= n;
            g = UnimodularMatrix::t_pow(-(n as i64)).mul(&g);
        }
        if z.norm_sqr() < 1.0 - EPS {
            z = -1.0 / z;
            g = UnimodularMatrix::s().mul(&g);
        } else {
            break;
        }
    }
    // Boundary conventions.
    if z.re > 0.5 - EPS {
        z -= 1.0;
        g = UnimodularMatrix::t_pow(-1).mul(&g);
    }
    if z.norm_sqr() < 1.0 + EPS && z.re > EPS {
        // On the unit arc with positive real part: flip to the Re <= 0 side.
        z = -1.0 / z;
        g = UnimodularMatrix::s().mul(&g);
    }
    Ok((z, g))
}
