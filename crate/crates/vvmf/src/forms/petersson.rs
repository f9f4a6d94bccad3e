//! Petersson inner products by adaptive tensor quadrature over the standard
//! fundamental domain: u in [-1/2, 1/2], v from sqrt(1 - u^2) up to a height
//! where the integrand tail is negligible.

use super::vvform::VVForm;
use crate::error::{Error, Result};
use crate::numerics::{integrate_adaptive, Quadrature};
use crate::Complex;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy)]
pub struct PeterssonResult {
    pub value: Complex,
    pub error_estimate: f64,
}

/// (f, g) = int_F <f, g> v^k du dv / v^2 for cusp forms in the same space.
pub fn petersson(f: &VVForm, g: &VVForm, quad: &Quadrature) -> Result<PeterssonResult> {
    if f.weight() != g.weight() || f.dimension() != g.dimension() {
        return Err(Error::validation(
            "Petersson product requires forms of equal weight and dimension".into(),
        ));
    }
    if f.expansion().min_exponent() <= 0.0 || g.expansion().min_exponent() <= 0.0 {
        return Err(Error::domain("Petersson product requires cusp forms"));
    }
    let k = f.weight().as_f64();
    let decay = 2.0 * PI * (f.expansion().min_exponent() + g.expansion().min_exponent());

    let inner = |u: f64, v_max: f64, q: &Quadrature| -> Result<Complex> {
        let v0 = (1.0 - u * u).sqrt();
        integrate_adaptive(
            |v| {
                let tau = Complex::new(u, v);
                let fv = f.evaluate(tau).expect("Im tau > 0 inside the domain");
                let gv = g.evaluate(tau).expect("Im tau > 0 inside the domain");
                let mut dot = Complex::new(0.0, 0.0);
                for (a, b) in fv.values.iter().zip(&gv.values) {
                    dot += a * b.conj();
                }
                dot * v.powf(k - 2.0)
            },
            v0,
            v_max,
            q,
        )
    };

    // Coarse pass to fix scales, then the tail-controlled height.
    let coarse_quad = Quadrature::new(30, (quad.relative_tolerance * 1e3).min(1e-4), 18)?;
    let coarse = integrate_adaptive(|u| inner(u, 4.0, &coarse_quad).unwrap_or_default(), -0.5, 0.5, &coarse_quad)?;
    let scale = coarse.norm().max(1e-280);

    // Height where the remaining strip contributes < tol * scale:
    // integrand ~ A e^{-decay v} v^{k-2}; solve by fixed-point iteration.
    let lead = integrand_scale(f, g, k);
    let target = quad.relative_tolerance * scale * 0.25;
    let mut v_max = 4.0f64;
    for _ in 0..40 {
        let tail = lead * (-decay * v_max).exp() * v_max.powf(k - 2.0) / decay;
        if tail < target {
            break;
        }
        v_max += 0.5;
    }
    let tail_bound = lead * (-decay * v_max).exp() * v_max.powf(k - 2.0) / decay;

    let value = integrate_adaptive(
        |u| inner(u, v_max, quad).unwrap_or_default(),
        -0.5,
        0.5,
        quad,
    )?;
    Ok(PeterssonResult {
        value,
        error_estimate: quad.relative_tolerance * value.norm() * 4.0 + tail_bound,
    })
}

fn integrand_scale(f: &VVForm, g: &VVForm, k: f64) -> f64 {
    let lead = |h: &VVForm| -> f64 {
        h.expansion()
            .components
            .iter()
            .flat_map(|c| c.coeffs.values())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
            .max(1.0)
    };
    lead(f) * lead(g) * (1.0 + k)
}

/// Hyperbolic area of the fundamental domain by the same machinery
/// (unit integrand, k = 0); the exact value is pi / 3.
pub fn volume_check(quad: &Quadrature) -> Result<f64> {
    let value = integrate_adaptive(
        |u| {
            let v0 = (1.0 - u * u).sqrt();
            // int_{v0}^{inf} dv / v^2 = 1 / v0, exact in v.
            Complex::new(1.0 / v0, 0.0)
        },
        -0.5,
        0.5,
        quad,
    )?;
    Ok(value.re)
}

/// Fully numerical volume variant integrating dv/v^2 up to v_max; used to
/// demonstrate the tail-violation accuracy flag.
pub fn volume_check_truncated(quad: &Quadrature, v_max: f64) -> Result<(f64, bool)> {
    let value = integrate_adaptive(
        |u| {
            let v0 = (1.0 - u * u).sqrt();
            Complex::new(1.0 / v0 - 1.0 / v_max, 0.0)
        },
        -0.5,
        0.5,
        quad,
    )?;
    // Flag when the discarded tail 1/v_max is not negligible.
    let flagged = 1.0 / v_max > quad.relative_tolerance * value.re.abs();
    Ok((value.re, flagged))
}
