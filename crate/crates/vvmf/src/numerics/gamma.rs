//! Complex log-gamma by the Stirling series with recurrence-based argument
//! shifting, plus the reflection formula for the left half-plane.

use crate::error::{Error, Result};
use crate::Complex;
use std::f64::consts::PI;

/// Stirling series coefficients B_{2n} / (2n (2n-1)).
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// Radius beyond which the Stirling series is applied directly.
const SHIFT_RADIUS: f64 = 12.0;

fn is_nonpositive_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// log Gamma(z), principal determination (real on the positive real axis,
/// continuous on the cut plane reached through the right half-plane).
///
/// exp(log_gamma(z)) reproduces Gamma(z) to ~1e-13 relative accuracy on
/// Re z in [-50, 200], |Im z| <= 100, away from the poles.
pub fn log_gamma(z: Complex) -> Result<Complex> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { z });
    }
    if z.re >= 0.5 {
        Ok(log_gamma_right(z))
    } else {
        // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
        let lg = log_gamma_right(Complex::new(1.0, 0.0) - z);
        let ls = log_sin_pi(z);
        Ok(Complex::new(PI.ln(), 0.0) - ls - lg)
    }
}

/// Gamma(z) as an unscaled complex value (may overflow for large Re z).
pub fn gamma_fn(z: Complex) -> Result<Complex> {
    Ok(log_gamma(z)?.exp())
}

fn log_gamma_right(mut z: Complex) -> Complex {
    // Shift upward until |z| is comfortably inside the Stirling regime.
    let mut shift = Complex::new(0.0, 0.0);
    while z.norm() < SHIFT_RADIUS {
        shift += z.ln();
        z += 1.0;
    }
    stirling(z) - shift
}

fn stirling(z: Complex) -> Complex {
    let half_ln_2pi = 0.5 * (2.0 * PI).ln();
    let mut acc = (z - 0.5) * z.ln() - z + half_ln_2pi;
    let z2 = z * z;
    let mut zp = z;
    for c in STIRLING {
        acc += c / zp;
        zp *= z2;
    }
    acc
}

/// log sin(pi z), stable for large |Im z|.
fn log_sin_pi(z: Complex) -> Complex {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})   for Im z > 0,
    // and the conjugate-mirrored form for Im z < 0.
    if z.im >= 0.0 {
        let q = (Complex::i() * 2.0 * PI * z).exp();
        let ln_main = -Complex::i() * PI * z;
        ln_main + (Complex::new(1.0, 0.0) - q).ln() + Complex::new(0.0, 0.5).ln()
    } else {
        let q = (-Complex::i() * 2.0 * PI * z).exp();
        let ln_main = Complex::i() * PI * z;
        ln_main + (Complex::new(1.0, 0.0) - q).ln() + Complex::new(0.0, -0.5).ln()
    }
}

/// Gamma(k/2 - delta - i t0) / Gamma(k/2 + delta + i t0), computed in the log
/// domain. As k grows the ratio approaches (k/2)^(-2 delta - 2 i t0).
pub fn gamma_ratio(k: f64, delta: f64, t0: f64) -> Result<Complex> {
    let a = Complex::new(k / 2.0 - delta, -t0);
    let b = Complex::new(k / 2.0 + delta, t0);
    if k / 2.0 - delta <= 0.0 {
        return Err(Error::domain(format!(
            "gamma_ratio requires k/2 - delta > 0, got {}",
            k / 2.0 - delta
        )));
    }
    Ok((log_gamma(a)? - log_gamma(b)?).exp())
}
