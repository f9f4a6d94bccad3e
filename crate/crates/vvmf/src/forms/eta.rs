//! Exact integer q-series for eta powers and the level-2 eta products used as
//! test forms, plus pointwise evaluation of the eta function itself.

use super::expansion::{Component, FourierExpansion};
use super::vvform::VVForm;
use crate::error::{Error, Result};
use crate::rep::{MultiplierSystem, Representation};
use crate::{Complex, Weight};

/// Coefficients of prod_{n>=1} (1 - q^n)^r up to q^{n_max}, exact integers.
pub fn euler_product_pow(r: u32, n_max: usize) -> Vec<i128> {
    // One factor at a time; each (1 - q^n) multiply is a shifted subtraction.
    let mut base = vec![0i128; n_max + 1];
    base[0] = 1;
    for n in 1..=n_max {
        for j in (n..=n_max).rev() {
            let t = base[j - n];
            base[j] -= t;
        }
    }
    // base = prod (1 - q^n); raise to the r-th power.
    let mut acc = vec![0i128; n_max + 1];
    acc[0] = 1;
    for _ in 0..r {
        acc = series_mul(&acc, &base, n_max);
    }
    acc
}

pub(crate) fn series_mul(a: &[i128], b: &[i128], n_max: usize) -> Vec<i128> {
    let mut out = vec![0i128; n_max + 1];
    for i in 0..=n_max {
        if a[i] == 0 {
            continue;
        }
        for j in 0..=(n_max - i) {
            out[i + j] += a[i].checked_mul(b[j]).expect("series coefficient overflow");
        }
    }
    out
}

/// The cusp form eta^r as a one-component form: weight r/2, eta-power
/// multiplier, trivial representation, kappa = frac(r/24).
pub fn build_eta_power(r: u32, n_max: i64) -> Result<VVForm> {
    if r == 0 || n_max < 1 {
        return Err(Error::domain("build_eta_power needs r >= 1 and n_max >= 1"));
    }
    let offset = r as i64 / 24; // integer part of r/24
    let kappa_num = r as i64 % 24;
    let mut component = Component::new(kappa_num, 24, 1)?;
    let coeffs = euler_product_pow(r, (n_max - offset).max(0) as usize);
    for (idx, c) in coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let key = idx as i64 + offset;
        if key > n_max {
            break;
        }
        component.insert(key, Complex::new(*c as f64, 0.0))?;
    }
    let expansion = FourierExpansion { components: vec![component], n_max };
    VVForm::assemble(
        format!("eta^{r}"),
        Weight::from_twice(r as i64),
        MultiplierSystem::eta_power(r as i64),
        Representation::trivial(),
        expansion,
    )
}

/// eta(tau) by its q-series (exact integer coefficients of eta/q^{1/24}).
pub fn eta_function(tau: Complex, n_max: usize) -> Complex {
    let coeffs = euler_product_pow(1, n_max);
    let q = (Complex::i() * 2.0 * std::f64::consts::PI * tau).exp();
    let mut acc = Complex::new(0.0, 0.0);
    let mut qn = Complex::new(1.0, 0.0);
    for c in coeffs {
        acc += c as f64 * qn;
        qn *= q;
    }
    let q24 = (Complex::i() * 2.0 * std::f64::consts::PI * tau / 24.0).exp();
    q24 * acc
}

/// The three component expansions of the level-2 weight-8 eta product
/// f = (eta(tau) eta(2 tau))^8 sliced along the cosets {I, S, ST}:
///   f itself (integer grid), f|S = eta(tau)^8 eta(tau/2)^8 / 16 and
///   f|ST = (f|S)(tau + 1) (both on the half-integer grid).
pub fn level2_eta_components(n_max: i64) -> Result<Vec<Component>> {
    let n = n_max.max(4) as usize;

    // f = q * prod (1-q^m)^8 (1-q^{2m})^8 on the integer grid.
    let e1 = euler_product_pow(8, n);
    let mut e2 = vec![0i128; n + 1];
    let half = euler_product_pow(8, n / 2);
    for (i, c) in half.iter().enumerate() {
        if 2 * i <= n {
            e2[2 * i] = *c;
        }
    }
    let f_tail = series_mul(&e1, &e2, n);
    let mut c0 = Component::new(0, 1, 1)?;
    for (i, v) in f_tail.iter().enumerate() {
        if *v != 0 && (i as i64) + 1 <= n_max {
            c0.insert(i as i64 + 1, Complex::new(*v as f64, 0.0))?;
        }
    }

    // f|S on the x = q^{1/2} grid: x * prod (1-x^{2m})^8 (1-x^m)^8 / 16.
    let m = 2 * n;
    let g1 = euler_product_pow(8, m);
    let mut g2 = vec![0i128; m + 1];
    for (i, c) in euler_product_pow(8, m / 2).iter().enumerate() {
        if 2 * i <= m {
            g2[2 * i] = *c;
        }
    }
    let fs_tail = series_mul(&g1, &g2, m);
    let mut c1 = Component::new(0, 1, 2)?;
    let mut c2 = Component::new(0, 1, 2)?;
    for (i, v) in fs_tail.iter().enumerate() {
        if *v == 0 {
            continue;
        }
        let key = i as i64 + 1; // exponent key/2
        if key > 2 * n_max {
            break;
        }
        let value = *v as f64 / 16.0;
        c1.insert(key, Complex::new(value, 0.0))?;
        // f|ST: multiply the exponent key/2 coefficient by e^{i pi key}.
        let sign = if key % 2 == 0 { 1.0 } else { -1.0 };
        c2.insert(key, Complex::new(sign * value, 0.0))?;
    }

    Ok(vec![c0, c1, c2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_coefficients() {
        // Ramanujan tau values from the exact product expansion.
        let f = build_eta_power(24, 30).unwrap();
        let c = &f.expansion().components[0];
        let a = |n: i64| c.coeffs.get(&n).copied().unwrap_or(Complex::new(0.0, 0.0)).re;
        assert_eq!(a(1), 1.0);
        assert_eq!(a(2), -24.0);
        assert_eq!(a(3), 252.0);
        assert_eq!(a(4), -1472.0);
        assert_eq!(a(5), 4830.0);
        assert_eq!(a(6), -6048.0);
    }

    #[test]
    fn eta6_structure() {
        let f = build_eta_power(6, 20).unwrap();
        assert_eq!(f.weight().twice(), 6);
        let c = &f.expansion().components[0];
        assert_eq!((c.kappa_num, c.kappa_den), (6, 24));
        // Leading coefficient 1 at exponent 1/4.
        assert_eq!(c.coeffs.get(&0).unwrap().re, 1.0);
    }

    #[test]
    fn eta_transformation_under_s() {
        // eta(-1/tau) = sqrt(-i tau) eta(tau), checked numerically at tau = 2i
        // where both series converge fast.
        let tau = Complex::new(0.0, 2.0);
        let lhs = eta_function(-1.0 / tau, 80);
        let root = (-Complex::i() * tau).sqrt();
        let rhs = root * eta_function(tau, 80);
        assert!((lhs - rhs).norm() / rhs.norm() < 1e-12, "{lhs} vs {rhs}");
    }

    #[test]
    fn level2_leading_terms() {
        let comps = level2_eta_components(12).unwrap();
        // f = q - 8q^2 + 12q^3 + 64q^4 - 210q^5 ... (the weight-8 level-2 form)
        let a = |n: i64| comps[0].coeffs.get(&n).map(|z| z.re).unwrap_or(0.0);
        assert_eq!(a(1), 1.0);
        assert_eq!(a(2), -8.0);
        assert_eq!(a(3), 12.0);
        assert_eq!(a(4), 64.0);
        assert_eq!(a(5), -210.0);
        // f|S leading term: q^{1/2}/16.
        let b = |n: i64| comps[1].coeffs.get(&n).map(|z| z.re).unwrap_or(0.0);
        assert_eq!(b(1), 1.0 / 16.0);
        // f|ST flips odd half-integer exponents.
        let c = |n: i64| comps[2].coeffs.get(&n).map(|z| z.re).unwrap_or(0.0);
        assert_eq!(c(1), -1.0 / 16.0);
        assert_eq!(c(2), b(2));
    }
}
