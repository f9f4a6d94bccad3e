//! The vector-valued modular form data model: weight, multiplier,
//! representation, truncated expansion; pointwise evaluation and the slash
//! action.

use super::expansion::FourierExpansion;
use crate::error::{Error, Result};
use crate::numerics::cpow;
use crate::rep::{MultiplierSystem, Representation};
use crate::modgroup::UnimodularMatrix;
use crate::{Complex, Weight};
use std::f64::consts::PI;
use std::sync::Arc;

/// Result of a pointwise evaluation: component values plus a bound on the
/// truncated tail (propagated into downstream error budgets).
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub values: Vec<Complex>,
    pub tail_estimate: f64,
    /// Set when the geometric tail bound could not be certified at this
    /// height (2 pi Im tau (N + kappa) <= k).
    pub accuracy_warning: bool,
}

#[derive(Debug, Clone)]
pub struct VVForm {
    label: String,
    weight: Weight,
    chi: MultiplierSystem,
    rho: Representation,
    expansion: Arc<FourierExpansion>,
    growth_constant: f64,
}

impl VVForm {
    /// Assemble and sanity-check a form. The modularity residual is checked
    /// when the truncation is deep enough to make the test meaningful.
    pub fn assemble(
        label: String,
        weight: Weight,
        chi: MultiplierSystem,
        rho: Representation,
        expansion: FourierExpansion,
    ) -> Result<VVForm> {
        if rho.dim() != expansion.dimension() {
            return Err(Error::validation(format!(
                "representation dimension {} does not match component count {}",
                rho.dim(),
                expansion.dimension()
            )));
        }
        let growth_constant = expansion.growth_check(weight.as_f64() / 2.0 + 0.51, 64.0)?;
        let f = VVForm {
            label,
            weight,
            chi,
            rho,
            expansion: Arc::new(expansion),
            growth_constant,
        };
        if f.expansion.n_max >= 50 {
            let residual = f.modularity_residual_at(&UnimodularMatrix::s(), Complex::new(0.0, 1.0))?;
            if residual > 1e-6 {
                return Err(Error::validation(format!(
                    "modularity residual {residual:.3e} under S at tau = i exceeds 1e-6 for '{}'",
                    f.label
                )));
            }
        }
        Ok(f)
    }

    /// Assemble without the modularity self-check (for synthetic data that is
    /// not modular, e.g. kernel reconstructions paired with quadrature).
    pub fn assemble_unchecked(
        label: String,
        weight: Weight,
        chi: MultiplierSystem,
        rho: Representation,
        expansion: FourierExpansion,
    ) -> Result<VVForm> {
        if rho.dim() != expansion.dimension() {
            return Err(Error::validation("dimension mismatch".to_string()));
        }
        Ok(VVForm {
            label,
            weight,
            chi,
            rho,
            expansion: Arc::new(expansion),
            growth_constant: 0.0,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn chi(&self) -> &MultiplierSystem {
        &self.chi
    }

    pub fn rho(&self) -> &Representation {
        &self.rho
    }

    pub fn expansion(&self) -> &FourierExpansion {
        &self.expansion
    }

    pub fn dimension(&self) -> usize {
        self.expansion.dimension()
    }

    pub fn is_zero(&self) -> bool {
        self.expansion.components.iter().all(|c| c.coeffs.is_empty())
    }

    /// Scale all coefficients (used by linearity tests).
    pub fn scaled(&self, z: Complex) -> VVForm {
        let mut e = (*self.expansion).clone();
        for c in &mut e.components {
            for v in c.coeffs.values_mut() {
                *v *= z;
            }
        }
        VVForm {
            label: format!("{} * {}", z, self.label),
            weight: self.weight,
            chi: self.chi.clone(),
            rho: self.rho.clone(),
            expansion: Arc::new(e),
            growth_constant: self.growth_constant * z.norm(),
        }
    }

    /// Truncated evaluation with a geometric tail bound.
    pub fn evaluate(&self, tau: Complex) -> Result<Evaluation> {
        if tau.im <= 0.0 {
            return Err(Error::domain("evaluation requires Im tau > 0"));
        }
        let v = tau.im;
        let mut values = Vec::with_capacity(self.dimension());
        for comp in &self.expansion.components {
            let mut acc = Complex::new(0.0, 0.0);
            for (n, a) in &comp.coeffs {
                let x = comp.exponent(*n);
                acc += a * (Complex::i() * 2.0 * PI * x * tau).exp();
            }
            values.push(acc);
        }
        // Tail: first omitted exponent x0; |a(x)| <= G x^{k/2 + 0.51} and the
        // ratio test gives geometric domination once 2 pi v x0 > k.
        let k = self.weight.as_f64();
        let x0 = self
            .expansion
            .components
            .iter()
            .map(|c| c.exponent(self.expansion.n_max + 1))
            .fold(f64::INFINITY, f64::min);
        let dominated = 2.0 * PI * v * x0 > k;
        let first_omitted =
            self.growth_constant * x0.powf(k / 2.0 + 0.51) * (-2.0 * PI * x0 * v).exp();
        Ok(Evaluation {
            values,
            tail_estimate: 2.0 * first_omitted,
            accuracy_warning: !dominated,
        })
    }

    /// (f |_{k, chi, rho} gamma)(tau) = chi^{-1}(gamma) (c tau + d)^{-k}
    /// rho^{-1}(gamma) f(gamma tau), with the principal branch power.
    pub fn slash_eval(&self, gamma: &UnimodularMatrix, tau: Complex) -> Result<Vec<Complex>> {
        let transformed = self.evaluate(gamma.act(tau))?;
        Ok(slash_values(
            &transformed.values,
            gamma,
            self.weight,
            &self.chi,
            &self.rho,
            tau,
        ))
    }

    /// sup over components of |(f|gamma)(tau) - f(tau)| / max ||f(tau)||.
    pub fn modularity_residual_at(&self, gamma: &UnimodularMatrix, tau: Complex) -> Result<f64> {
        let direct = self.evaluate(tau)?.values;
        let slashed = self.slash_eval(gamma, tau)?;
        let scale = direct
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        Ok(direct
            .iter()
            .zip(&slashed)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max)
            / scale)
    }
}

/// Apply the slash action to already-computed values f(gamma tau).
pub fn slash_values(
    values_at_gamma_tau: &[Complex],
    gamma: &UnimodularMatrix,
    weight: Weight,
    chi: &MultiplierSystem,
    rho: &Representation,
    tau: Complex,
) -> Vec<Complex> {
    let j = gamma.automorphy_denominator(tau);
    let scalar = chi.eval(gamma).conj() * cpow(j, Complex::new(-weight.as_f64(), 0.0));
    let rotated = rho.eval_inverse(gamma).apply(values_at_gamma_tau);
    rotated.into_iter().map(|z| z * scalar).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::eta::build_eta_power;

    #[test]
    fn delta_value_at_i() {
        let delta = build_eta_power(24, 60).unwrap();
        let e = delta.evaluate(Complex::new(0.0, 1.0)).unwrap();
        // q = e^{-2 pi}; the value is real and ~ 0.0017853.
        assert!(e.values[0].im.abs() < 1e-12);
        assert!(
            (e.values[0].re - 0.001785389).abs() < 1e-8,
            "Delta(i) = {}",
            e.values[0]
        );
        assert!(!e.accuracy_warning);
        assert!(e.tail_estimate < 1e-12);
    }

    #[test]
    fn leading_term_dominates_high_up() {
        let f = build_eta_power(6, 30).unwrap();
        let tau = Complex::new(0.3, 12.0);
        let e = f.evaluate(tau).unwrap();
        let lead = (Complex::i() * 2.0 * PI * 0.25 * tau).exp();
        assert!((e.values[0] - lead).norm() / lead.norm() < 1e-12);
    }

    #[test]
    fn slash_by_identity_and_t() {
        let delta = build_eta_power(24, 60).unwrap();
        let tau = Complex::new(0.17, 0.9);
        let direct = delta.evaluate(tau).unwrap().values;
        let id = delta.slash_eval(&UnimodularMatrix::identity(), tau).unwrap();
        assert!((direct[0] - id[0]).norm() < 1e-14);
        // Integer kappa = 0: slash by T is also exact.
        let t = delta.slash_eval(&UnimodularMatrix::t_pow(1), tau).unwrap();
        assert!((direct[0] - t[0]).norm() / direct[0].norm() < 1e-12);
    }

    #[test]
    fn modularity_under_s() {
        let delta = build_eta_power(24, 60).unwrap();
        let r = delta
            .modularity_residual_at(&UnimodularMatrix::s(), Complex::new(0.0, 1.0))
            .unwrap();
        assert!(r < 1e-8, "Delta residual {r}");

        let eta6 = build_eta_power(6, 80).unwrap();
        let tau = Complex::new(0.0, 2.0);
        let slashed = eta6.slash_eval(&UnimodularMatrix::s(), tau).unwrap();
        let want = eta6.evaluate(tau).unwrap().values;
        assert!(
            (slashed[0] - want[0]).norm() / want[0].norm() < 1e-8,
            "eta^6 under S at 2i: {} vs {}",
            slashed[0],
            want[0]
        );
    }

    /// Random-word modularity residuals for the shipped builder forms.
    #[test]
    fn modularity_random_words() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0031);
        let forms = [build_eta_power(24, 80).unwrap(), build_eta_power(6, 120).unwrap()];
        let samples = [
            Complex::new(0.05, 1.0),
            Complex::new(-0.3, 1.4),
            Complex::new(0.41, 0.9),
            Complex::new(0.0, 2.2),
            Complex::new(0.2, 0.95),
        ];
        for f in &forms {
            for _ in 0..10 {
                let mut g = UnimodularMatrix::identity();
                for _ in 0..6 {
                    g = g.mul(&if rng.gen_bool(0.4) {
                        UnimodularMatrix::s()
                    } else {
                        UnimodularMatrix::t_pow(rng.gen_range(-3..=3))
                    });
                }
                for tau in samples {
                    let r = f.modularity_residual_at(&g, tau).unwrap();
                    assert!(r < 1e-6, "{}: residual {r} under {g} at {tau}", f.label());
                }
            }
        }
    }
}
