//! The metaplectic double cover: pairs (gamma, phi) with phi(tau)^2 = c tau + d.
//!
//! The branch function phi is stored as a sign relative to the principal
//! square root. Branch signs are constant on the upper half-plane, so the
//! group law resolves the product branch by one evaluation at tau = 2i.

use super::UnimodularMatrix;
use crate::Complex;

/// An element of the double cover of SL2(Z): phi(tau) = branch * sqrt(c tau + d)
/// with the principal square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetaplecticElement {
    pub matrix: UnimodularMatrix,
    pub branch: i8,
}

const SAMPLE: Complex = Complex::new(0.0, 2.0);

impl MetaplecticElement {
    /// phi evaluated at tau.
    pub fn phi(&self, tau: Complex) -> Complex {
        let j = self.matrix.automorphy_denominator(tau);
        self.branch as f64 * j.sqrt()
    }
}

/// The standard lift gamma -> (gamma, principal sqrt(c tau + d)).
pub fn mp_lift(matrix: UnimodularMatrix) -> MetaplecticElement {
    MetaplecticElement { matrix, branch: 1 }
}

/// Group law: (g1, phi1)(g2, phi2) = (g1 g2, phi1(g2 tau) phi2(tau)).
pub fn mp_multiply(x: &MetaplecticElement, y: &MetaplecticElement) -> MetaplecticElement {
    let matrix = x.matrix.mul(&y.matrix);
    let lhs = x.phi(y.matrix.act(SAMPLE)) * y.phi(SAMPLE);
    let principal = matrix.automorphy_denominator(SAMPLE).sqrt();
    let ratio = lhs / principal;
    // ratio is exactly +-1 up to rounding.
    debug_assert!(
        (ratio.norm() - 1.0).abs() < 1e-9 && ratio.im.abs() < 1e-6,
        "branch resolution failed: ratio {ratio}"
    );
    let branch = if ratio.re >= 0.0 { 1 } else { -1 };
    MetaplecticElement { matrix, branch }
}
