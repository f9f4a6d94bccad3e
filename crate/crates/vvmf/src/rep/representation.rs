//! Unitary representations of SL2(Z) given by generator images, evaluated
//! along generator words with memoization.

use super::cmat::CMat;
use crate::error::{Error, Result};
use crate::modgroup::{decompose_word, Letter, UnimodularMatrix};
use crate::Complex;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// The matrix rho(-I).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinusIdentityAction {
    /// rho(-I) = Id (the default for the forms treated here).
    Identity,
    /// rho(-I) maps e_j to e_{2m-j} (indices mod 2m), the action arising on
    /// theta components of Jacobi forms.
    JacobiFlip,
}

struct Inner {
    dim: usize,
    t_image: CMat,
    s_image: CMat,
    minus_identity: MinusIdentityAction,
    /// rho(-I) as a matrix (equals s_image^2; cached).
    minus_matrix: CMat,
    /// T-image diagonal fast path for powers.
    t_diagonal: Option<Vec<Complex>>,
    memo: Mutex<HashMap<(i64, i64, i64, i64), Arc<CMat>>>,
}

/// A unitary representation, constructed from generator images which are
/// validated against the group relations, then frozen. Evaluation is
/// read-only; the memo table is internally synchronized.
#[derive(Clone)]
pub struct Representation {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Representation")
            .field("dim", &self.inner.dim)
            .field("minus_identity", &self.inner.minus_identity)
            .finish()
    }
}

const REL_TOL: f64 = 1e-12;

impl Representation {
    pub fn new(
        t_image: CMat,
        s_image: CMat,
        minus_identity: MinusIdentityAction,
    ) -> Result<Self> {
        let dim = t_image.dim();
        if s_image.dim() != dim {
            return Err(Error::Structure("generator images of unequal dimension".into()));
        }
        if t_image.unitarity_defect() > REL_TOL || s_image.unitarity_defect() > REL_TOL {
            return Err(Error::Structure("generator images are not unitary".into()));
        }
        let s2 = s_image.mul(&s_image);
        let minus_matrix = match minus_identity {
            MinusIdentityAction::Identity => {
                let id = CMat::identity(dim);
                if s2.max_entry_diff(&id) > 1e-11 {
                    return Err(Error::Structure(
                        "rho(S)^2 differs from the declared identity action of -I".into(),
                    ));
                }
                id
            }
            MinusIdentityAction::JacobiFlip => {
                let flip = flip_matrix(dim);
                if s2.max_entry_diff(&flip) > 1e-11 {
                    return Err(Error::Structure(
                        "rho(S)^2 differs from the declared flip action of -I".into(),
                    ));
                }
                flip
            }
        };
        // Braid relation (ST)^3 = S^2.
        let st = s_image.mul(&t_image);
        let st3 = st.mul(&st).mul(&st);
        if st3.max_entry_diff(&s2) > 1e-11 {
            return Err(Error::Structure("(ST)^3 = S^2 violated by generator data".into()));
        }
        // S^4 = Id.
        if s2.mul(&s2).max_entry_diff(&CMat::identity(dim)) > 1e-11 {
            return Err(Error::Structure("S^4 = Id violated by generator data".into()));
        }
        let t_diagonal = if t_image.off_diagonal_max() < 1e-14 {
            Some(t_image.diagonal())
        } else {
            None
        };
        Ok(Representation {
            inner: Arc::new(Inner {
                dim,
                t_image,
                s_image,
                minus_identity,
                minus_matrix,
                t_diagonal,
                memo: Mutex::new(HashMap::new()),
            }),
        })
    }

    /// The one-dimensional trivial representation.
    pub fn trivial() -> Self {
        Representation::new(CMat::identity(1), CMat::identity(1), MinusIdentityAction::Identity)
            .expect("trivial representation is consistent")
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn minus_identity_action(&self) -> MinusIdentityAction {
        self.inner.minus_identity
    }

    pub fn t_image(&self) -> &CMat {
        &self.inner.t_image
    }

    pub fn s_image(&self) -> &CMat {
        &self.inner.s_image
    }

    pub fn minus_identity_matrix(&self) -> &CMat {
        &self.inner.minus_matrix
    }

    fn t_power(&self, n: i64) -> CMat {
        if let Some(diag) = &self.inner.t_diagonal {
            let mut m = CMat::zeros(self.inner.dim);
            for (i, d) in diag.iter().enumerate() {
                // d has modulus one: the power is a phase rotation.
                let phase = d.arg() * n as f64;
                m[(i, i)] = Complex::new(phase.cos(), phase.sin());
            }
            m
        } else {
            self.inner.t_image.pow(n)
        }
    }

    /// rho(gamma), evaluated along the generator word and memoized.
    pub fn eval(&self, gamma: &UnimodularMatrix) -> Arc<CMat> {
        let key = (gamma.a, gamma.b, gamma.c, gamma.d);
        if let Some(hit) = self.inner.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let word = decompose_word(gamma);
        let mut m = CMat::identity(self.inner.dim);
        for letter in &word.letters {
            let g = match letter {
                Letter::S => self.inner.s_image.clone(),
                Letter::T(n) => self.t_power(*n),
            };
            m = m.mul(&g);
        }
        if word.sign < 0 {
            m = self.inner.minus_matrix.mul(&m);
        }
        let arc = Arc::new(m);
        self.inner.memo.lock().unwrap().insert(key, arc.clone());
        arc
    }

    /// rho(gamma)^{-1} = rho(gamma)^H.
    pub fn eval_inverse(&self, gamma: &UnimodularMatrix) -> CMat {
        self.eval(gamma).adjoint()
    }
}

fn flip_matrix(dim: usize) -> CMat {
    // e_j -> e_{2m - j} with indices 1..2m read mod 2m (so e_{2m} is fixed).
    let mut m = CMat::zeros(dim);
    for j in 1..=dim {
        let target = if j == dim { dim } else { dim - j };
        m[(target - 1, j - 1)] = Complex::new(1.0, 0.0);
    }
    m
}

/// Kappa exponents in [0, 1): e^{2 pi i kappa_j} is the (j, j) entry of
/// chi(T) rho(T), which must be diagonal.
pub fn extract_kappas(
    chi: &super::MultiplierSystem,
    rho: &Representation,
) -> Result<Vec<f64>> {
    let chi_t = chi.eval(&UnimodularMatrix::t_pow(1));
    let m = rho.t_image().scale(chi_t);
    if m.off_diagonal_max() > 1e-10 {
        return Err(Error::Structure(
            "chi(T) rho(T) is not diagonal; no per-component exponents exist".into(),
        ));
    }
    Ok(m.diagonal()
        .into_iter()
        .map(|d| {
            let k = d.arg() / (2.0 * std::f64::consts::PI);
            let k = k.rem_euclid(1.0);
            // Snap near-integer phases to exactly zero.
            if k > 1.0 - 1e-9 || k < 1e-9 {
                0.0
            } else {
                k
            }
        })
        .collect())
}
