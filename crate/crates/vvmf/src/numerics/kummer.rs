//! Confluent hypergeometric evaluations.
//!
//! `kummer_1f1_reg` is the Euler-type integral
//!     int_0^1 e^{zu} u^{alpha-1} (1-u)^{beta-alpha-1} du,
//! i.e. 1F1 scaled by Gamma(alpha) Gamma(beta-alpha) / Gamma(beta). It is
//! evaluated by adaptive quadrature with endpoint-power substitution, so the
//! small-parameter cases are handled as well as the peaked large-parameter
//! ones. `kummer_1f1` is the unscaled 1F1.

use super::{integrate_with_endpoint_powers, log_gamma, Quadrature};
use crate::error::{Error, Result};
use crate::Complex;

fn check_half_planes(alpha: Complex, beta: Complex) -> Result<()> {
    if alpha.re <= 0.0 || (beta - alpha).re <= 0.0 {
        return Err(Error::domain(format!(
            "kummer integral needs Re(alpha) > 0 and Re(beta - alpha) > 0, got alpha = {alpha}, beta = {beta}"
        )));
    }
    Ok(())
}

/// Regularized Kummer function 1f1(alpha, beta; z) as the integral on (0, 1).
pub fn kummer_1f1_reg(alpha: Complex, beta: Complex, z: Complex) -> Result<Complex> {
    check_half_planes(alpha, beta)?;
    let quad = Quadrature::default().with_tolerance(1e-13);
    let am1 = alpha - 1.0;
    let bam1 = beta - alpha - 1.0;
    integrate_with_endpoint_powers(
        |u, one_minus_u| (z * u + am1 * u.ln() + bam1 * one_minus_u.ln()).exp(),
        alpha.re,
        (beta - alpha).re,
        &quad,
    )
}

/// Kummer's function 1F1(alpha, beta; z) = 1f1 * Gamma(beta) / (Gamma(alpha) Gamma(beta-alpha)).
pub fn kummer_1f1(alpha: Complex, beta: Complex, z: Complex) -> Result<Complex> {
    check_half_planes(alpha, beta)?;
    let reg = kummer_1f1_reg(alpha, beta, z)?;
    let log_ratio = log_gamma(beta)? - log_gamma(alpha)? - log_gamma(beta - alpha)?;
    Ok(reg * log_ratio.exp())
}

/// Power-series 1F1 for small |z|; the workhorse inside lattice sums where the
/// argument is O(1/(ac)). Cancellation stays below ~e^{|z|}, so the series is
/// restricted to |z| <= 6 by the caller convention and cross-checked against
/// the integral route in tests.
pub fn hyp1f1_small_arg(alpha: Complex, beta: Complex, z: Complex) -> Complex {
    let mut term = Complex::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..200 {
        let nf = n as f64;
        term *= (alpha + nf) * z / ((beta + nf) * (nf + 1.0));
        sum += term;
        if term.norm() < sum.norm() * 1e-17 + 1e-300 {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::integrate_adaptive;

    #[test]
    fn reduces_to_beta_at_zero() {
        let alpha = Complex::new(2.0, 0.5);
        let beta = Complex::new(5.0, -0.25);
        let v = kummer_1f1_reg(alpha, beta, Complex::new(0.0, 0.0)).unwrap();
        let want = (log_gamma(alpha).unwrap() + log_gamma(beta - alpha).unwrap()
            - log_gamma(beta).unwrap())
        .exp();
        assert!((v - want).norm() / want.norm() < 1e-12, "got {v}, want {want}");

        let f = kummer_1f1(alpha, beta, Complex::new(0.0, 0.0)).unwrap();
        assert!((f - Complex::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn closed_form_alpha1_beta2() {
        // 1f1(1, 2; z) = (e^z - 1)/z  (plain integral of e^{zu}).
        for z in [Complex::new(0.7, 0.0), Complex::new(0.0, 3.0), Complex::new(-1.0, 2.0)] {
            let v = kummer_1f1_reg(Complex::new(1.0, 0.0), Complex::new(2.0, 0.0), z).unwrap();
            let want = (z.exp() - 1.0) / z;
            assert!((v - want).norm() / want.norm() < 1e-12, "z = {z}: got {v}, want {want}");
        }
        // 1F1(1, 2, 1) = e - 1
        let f = kummer_1f1(Complex::new(1.0, 0.0), Complex::new(2.0, 0.0), Complex::new(1.0, 0.0))
            .unwrap();
        assert!((f.re - (std::f64::consts::E - 1.0)).abs() < 1e-12);
    }

    /// Independent oracle: plain adaptive quadrature of the defining integral
    /// without any endpoint substitution (the integrand is regular here).
    #[test]
    fn matches_plain_quadrature_oracle() {
        let quad = Quadrature::default().with_tolerance(1e-13);
        let cases = [
            (Complex::new(2.0, 0.0), Complex::new(4.0, 0.0), Complex::new(0.0, 1.0)),
            (Complex::new(3.0, 0.0), Complex::new(7.0, 0.0), Complex::new(0.0, -2.0 * std::f64::consts::PI)),
            (Complex::new(6.0, 0.3), Complex::new(12.0, 0.0), Complex::new(0.0, 5.0)),
        ];
        for (a, b, z) in cases {
            let v = kummer_1f1_reg(a, b, z).unwrap();
            let oracle = integrate_adaptive(
                |u| {
                    if u <= 0.0 || u >= 1.0 {
                        return Complex::new(0.0, 0.0);
                    }
                    (z * u + (a - 1.0) * u.ln() + (b - a - 1.0) * (1.0 - u).ln()).exp()
                },
                0.0,
                1.0,
                &quad,
            )
            .unwrap();
            assert!(
                (v - oracle).norm() / oracle.norm() < 1e-11,
                "({a},{b},{z}): {v} vs {oracle}"
            );
        }
    }

    #[test]
    fn series_route_agrees_with_integral_route() {
        let cases = [
            (Complex::new(6.0, 0.0), Complex::new(12.0, 0.0), Complex::new(0.0, 0.9)),
            (Complex::new(5.7, -0.3), Complex::new(12.0, 0.0), Complex::new(0.0, -3.5)),
            (Complex::new(2.0, 0.0), Complex::new(4.0, 0.0), Complex::new(0.5, 2.0)),
        ];
        for (a, b, z) in cases {
            let s = hyp1f1_small_arg(a, b, z);
            let i = kummer_1f1(a, b, z).unwrap();
            assert!(
                (s - i).norm() / i.norm() < 1e-11,
                "({a},{b},{z}): series {s} vs integral {i}"
            );
        }
    }

    #[test]
    fn rejects_bad_half_planes() {
        assert!(kummer_1f1_reg(
            Complex::new(-0.5, 0.0),
            Complex::new(2.0, 0.0),
            Complex::new(0.0, 0.0)
        )
        .is_err());
        assert!(kummer_1f1_reg(
            Complex::new(3.0, 0.0),
            Complex::new(3.5, 0.0),
            Complex::new(0.0, 0.0)
        )
        .is_ok());
        assert!(kummer_1f1_reg(
            Complex::new(3.0, 0.0),
            Complex::new(2.5, 0.0),
            Complex::new(0.0, 0.0)
        )
        .is_err());
    }

    /// Modulus bound on the imaginary axis: |1f1(a, b; it)| <= B(Re a, Re b - Re a).
    #[test]
    fn imaginary_axis_beta_bound() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..1_000 {
            let ar = rng.gen_range(1.0..6.0);
            let gap = rng.gen_range(1.0..6.0);
            let ai = rng.gen_range(-2.0..2.0);
            let bi = rng.gen_range(-2.0..2.0);
            let t = rng.gen_range(-20.0..20.0);
            let alpha = Complex::new(ar, ai);
            let beta = alpha + Complex::new(gap, bi);
            let v = kummer_1f1_reg(alpha, beta, Complex::new(0.0, t)).unwrap();
            let bound = (log_gamma(Complex::new(ar, 0.0)).unwrap()
                + log_gamma(Complex::new(gap, 0.0)).unwrap()
                - log_gamma(Complex::new(ar + gap, 0.0)).unwrap())
            .exp()
            .re;
            assert!(
                v.norm() <= bound + 1e-12,
                "bound violated: |1f1| = {} > B = {bound} at alpha={alpha}, beta={beta}, t={t}",
                v.norm()
            );
        }
    }
}
