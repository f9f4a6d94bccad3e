//! Exact arithmetic on SL2(Z), its metaplectic double cover, Gamma_0(N) coset
//! structure, fundamental-domain reduction, and lattice-point enumeration.

mod cosets;
mod enumeration;
mod matrix;
mod metaplectic;
mod word;

pub use cosets::coset_representatives;
pub use enumeration::{CompletionRule, CoprimePairEnumeration, DDomain};
pub use matrix::{reduce_to_fundamental_domain, UnimodularMatrix};
pub use metaplectic::{mp_lift, mp_multiply, MetaplecticElement};
pub use word::{decompose_word, GeneratorWord, Letter};
