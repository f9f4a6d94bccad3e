//! Complex special functions and summation identities used by every other module.
//!
//! Everything here is a pure function of its arguments. Overflow-prone
//! gamma-factor products are assembled in [`ComplexScaled`] (log-magnitude plus
//! phase) and exponentiated last.

mod gamma;
mod incgamma;
mod kummer;
mod lattice;
mod quad;
mod scaled;

pub use gamma::{gamma_fn, gamma_ratio, log_gamma};
pub use incgamma::upper_incomplete_gamma;
pub use kummer::{hyp1f1_small_arg, kummer_1f1_reg, kummer_1f1};
pub use lattice::{lipschitz_pair, shifted_lattice_sum, shifted_lattice_sum_jet};
pub use quad::{integrate_adaptive, integrate_with_endpoint_powers, Quadrature};
pub use scaled::ComplexScaled;

use crate::Complex;

/// Principal-branch complex power z^s = exp(s Log z).
pub fn cpow(z: Complex, s: Complex) -> Complex {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex::new(0.0, 0.0);
    }
    (s * z.ln()).exp()
}

/// Principal-branch power of a positive real base.
pub fn rpow(x: f64, s: Complex) -> Complex {
    debug_assert!(x > 0.0);
    (s * x.ln()).exp()
}

/// e^{i pi s / 2} for complex s, assembled from real/imaginary parts.
pub fn exp_i_pi_half(s: Complex) -> Complex {
    use std::f64::consts::PI;
    // e^{i pi (a+bi)/2} = e^{-pi b/2} (cos(pi a/2) + i sin(pi a/2))
    let mag = (-PI * s.im / 2.0).exp();
    let (sin, cos) = (PI * s.re / 2.0).sin_cos();
    Complex::new(mag * cos, mag * sin)
}

/// e^{2 pi i x} for real x.
pub fn e2pi(x: f64) -> Complex {
    let (sin, cos) = (2.0 * std::f64::consts::PI * x).sin_cos();
    Complex::new(cos, sin)
}
