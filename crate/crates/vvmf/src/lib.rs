//! Computations with vector-valued modular forms of weight k in (1/2)Z on SL2(Z).
//!
//! The crate is organized around a small number of subsystems:
//!
//! - [`numerics`]: complex special functions (log-gamma, incomplete gamma,
//!   confluent hypergeometric integrals), adaptive quadrature, and
//!   tail-accelerated lattice sums.
//! - [`modgroup`]: exact arithmetic on SL2(Z), generator-word decomposition,
//!   the metaplectic double cover, Gamma_0(N) coset representatives, and
//!   coprime-pair enumeration.
//! - [`rep`]: multiplier systems and unitary representations evaluated through
//!   generator words, including induced permutation representations and the
//!   Weil-type representations acting on theta components.
//! - [`forms`]: the vector-valued modular form data model, eta-power builders,
//!   pointwise evaluation, slash action, Petersson products, and file I/O.
//! - [`lfun`]: L-series, completed L-functions with analytic continuation, and
//!   functional-equation residuals.
//! - [`kernel`]: the kernel series R_{k,s,l}, its Fourier coefficients in
//!   closed form and by direct-series oracles, the non-vanishing scanner, and
//!   the sufficient-bound certificate.
//! - [`jacobi`]: Jacobi forms, theta decomposition, partial L-functions, and
//!   the Petersson normalization bridge.

pub mod error;
pub mod numerics;
pub mod modgroup;
pub mod rep;
pub mod forms;
pub mod lfun;
pub mod kernel;
pub mod jacobi;

pub use error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type Complex = num_complex::Complex64;

/// Weight k in (1/2)Z, stored as 2k to keep arithmetic exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Weight {
    twice: i64,
}

impl Weight {
    pub fn from_twice(twice: i64) -> Self {
        Weight { twice }
    }

    pub fn from_int(k: i64) -> Self {
        Weight { twice: 2 * k }
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn as_f64(&self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn is_integral(&self) -> bool {
        self.twice % 2 == 0
    }

    pub fn is_even_integral(&self) -> bool {
        self.twice % 4 == 0
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}
