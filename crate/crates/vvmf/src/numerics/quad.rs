//! Adaptive Gauss-Legendre quadrature for complex-valued integrands of one
//! real variable, with an endpoint-power substitution helper for integrands
//! carrying algebraic singularities at 0 or 1.

use crate::error::{Error, Result};
use crate::Complex;

/// 15-point Gauss-Legendre nodes on [-1, 1] (non-negative half; mirrored).
const GL_X: [f64; 8] = [
    0.0,
    0.201194093997434522300628303394596,
    0.394151347077563369897207370981045,
    0.570972172608538847537226737253911,
    0.724417731360170047416186054613938,
    0.848206583410427216200648320774217,
    0.937273392400705904307758947710209,
    0.987992518020485428489565718586613,
];
const GL_W: [f64; 8] = [
    0.202578241925561272880620199967519,
    0.198431485327111576456118326443839,
    0.186161000015562211026800561866423,
    0.166269205816993933553200860481209,
    0.139570677926154314447804794511028,
    0.107159220467171935011869546685869,
    0.070366047488108124709267416450667,
    0.030753241996117268354628393577204,
];

/// Quadrature configuration shared by the integral-based operations.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub node_count: usize,
    pub relative_tolerance: f64,
    pub max_refinements: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            node_count: 30,
            relative_tolerance: 1e-10,
            max_refinements: 28,
        }
    }
}

impl Quadrature {
    pub fn new(node_count: usize, relative_tolerance: f64, max_refinements: u32) -> Result<Self> {
        if node_count < 2 {
            return Err(Error::domain("quadrature node_count must be >= 2"));
        }
        if !(relative_tolerance > 0.0) {
            return Err(Error::domain("quadrature relative_tolerance must be > 0"));
        }
        Ok(Quadrature {
            node_count,
            relative_tolerance,
            max_refinements,
        })
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.relative_tolerance = tol;
        self
    }
}

fn gl15<F: FnMut(f64) -> Complex>(f: &mut F, a: f64, b: f64) -> Complex {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = GL_W[0] * f(c);
    for i in 1..8 {
        let dx = h * GL_X[i];
        acc += GL_W[i] * (f(c + dx) + f(c - dx));
    }
    acc * h
}

struct Adaptive<'a, F> {
    f: &'a mut F,
    abs_tol: f64,
    evals: usize,
    max_evals: usize,
}

impl<F: FnMut(f64) -> Complex> Adaptive<'_, F> {
    fn refine(&mut self, a: f64, b: f64, whole: Complex, depth: u32) -> Result<Complex> {
        let m = 0.5 * (a + b);
        let left = gl15(self.f, a, m);
        let right = gl15(self.f, m, b);
        self.evals += 30;
        let err = (left + right - whole).norm();
        if err < self.abs_tol || depth == 0 {
            if depth == 0 && err > 64.0 * self.abs_tol {
                return Err(Error::convergence(
                    format!("adaptive quadrature stalled on [{a}, {b}] (err {err:.3e})"),
                    Some(left + right),
                    Some(whole),
                ));
            }
            return Ok(left + right);
        }
        if self.evals > self.max_evals {
            return Err(Error::convergence(
                "adaptive quadrature evaluation budget exhausted",
                Some(left + right),
                Some(whole),
            ));
        }
        // Split the tolerance between the halves.
        let saved = self.abs_tol;
        self.abs_tol = saved * 0.5;
        let l = self.refine(a, m, left, depth - 1)?;
        let r = self.refine(m, b, right, depth - 1)?;
        self.abs_tol = saved;
        Ok(l + r)
    }
}

/// Integrate f over [a, b] adaptively to the quadrature's relative tolerance.
pub fn integrate_adaptive<F: FnMut(f64) -> Complex>(
    mut f: F,
    a: f64,
    b: f64,
    quad: &Quadrature,
) -> Result<Complex> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("integrate_adaptive requires finite endpoints"));
    }
    if a == b {
        return Ok(Complex::new(0.0, 0.0));
    }
    let panels = (quad.node_count / 15).max(1);
    let h = (b - a) / panels as f64;
    // Coarse pass fixes the absolute scale for the tolerance.
    let mut coarse = Vec::with_capacity(panels);
    let mut scale = 0.0f64;
    for i in 0..panels {
        let v = gl15(&mut f, a + i as f64 * h, a + (i + 1) as f64 * h);
        scale += v.norm();
        coarse.push(v);
    }
    let abs_tol = (scale.max(1e-300) * quad.relative_tolerance).max(1e-300);
    let mut adaptive = Adaptive {
        f: &mut f,
        abs_tol: abs_tol / panels as f64,
        evals: 0,
        max_evals: 4_000_000,
    };
    let mut total = Complex::new(0.0, 0.0);
    for (i, whole) in coarse.into_iter().enumerate() {
        total += adaptive.refine(a + i as f64 * h, a + (i + 1) as f64 * h, whole, quad.max_refinements)?;
    }
    Ok(total)
}

/// Integrate f over (0, 1) where f ~ u^{p-1} near 0 and (1-u)^{q-1} near 1
/// with p = re_left, q = re_right > 0. The integrand receives both u and
/// 1 - u so that neither quantity is lost to rounding near the endpoints.
/// The interval is split at 1/2 and each half is regularized by the
/// substitution u = t^m with m chosen so the transformed integrand has a C^1
/// endpoint.
pub fn integrate_with_endpoint_powers<F: FnMut(f64, f64) -> Complex>(
    mut f: F,
    re_left: f64,
    re_right: f64,
    quad: &Quadrature,
) -> Result<Complex> {
    if re_left <= 0.0 || re_right <= 0.0 {
        return Err(Error::domain(
            "endpoint exponents must have positive real part",
        ));
    }
    let power = |re: f64| -> f64 {
        if re >= 2.0 {
            1.0
        } else {
            (2.5 / re).ceil().min(24.0)
        }
    };
    let p = power(re_left);
    let q = power(re_right);

    // Left half: u = t^p maps (0, (1/2)^{1/p}) onto (0, 1/2).
    let t_left = 0.5f64.powf(1.0 / p);
    let left = integrate_adaptive(
        |t| {
            if t <= 0.0 {
                return Complex::new(0.0, 0.0);
            }
            let u = t.powf(p);
            if u == 0.0 {
                return Complex::new(0.0, 0.0);
            }
            f(u, 1.0 - u) * (p * t.powf(p - 1.0))
        },
        0.0,
        t_left,
        quad,
    )?;

    // Right half mirrored: 1 - u = t^q exactly.
    let t_right = 0.5f64.powf(1.0 / q);
    let right = integrate_adaptive(
        |t| {
            if t <= 0.0 {
                return Complex::new(0.0, 0.0);
            }
            let one_minus_u = t.powf(q);
            if one_minus_u == 0.0 {
                return Complex::new(0.0, 0.0);
            }
            f(1.0 - one_minus_u, one_minus_u) * (q * t.powf(q - 1.0))
        },
        0.0,
        t_right,
        quad,
    )?;

    Ok(left + right)
}
