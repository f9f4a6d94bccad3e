//! Multiplier systems and unitary representations of SL2(Z), evaluated via
//! generator words; extraction of the per-component exponents kappa_j.

pub mod cmat;
mod induced;
mod multiplier;
mod representation;
mod weil;

pub use cmat::CMat;
pub use induced::induced_permutation_rep;
pub use multiplier::{MultiplierKind, MultiplierSystem};
pub use representation::{extract_kappas, MinusIdentityAction, Representation};
pub use weil::{weil_rep, weil_s_tilde, weil_t_tilde};
