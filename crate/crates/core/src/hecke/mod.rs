//! The cyclotomic Hecke algebra `H_n(q, Q)` of type `G(l, 1, n)`.
//!
//! Elements are sparse maps on the Ariki-Koike basis
//! `{L_1^{a_1} ... L_n^{a_n} T_w : 0 <= a_k < l, w in Sym_n}`. The engine
//! multiplies in normal form, and this module also builds the Murphy basis,
//! the dual Murphy basis, the trace form and the semisimplicity test.

mod algebra;
mod bases;
mod element;

pub use algebra::{Hecke, HeckeParams};
pub use bases::is_semisimple;
pub use element::Element;

use thiserror::Error;

/// Errors raised by the Hecke algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("q must be invertible")]
    ZeroQ,
    #[error("at least one cyclotomic parameter is required")]
    NoParameters,
    #[error("generator {name}_{index} out of range 1..={max}")]
    Index {
        name: &'static str,
        index: usize,
        max: usize,
    },
    #[error("permutation of degree {got}, expected {want}")]
    Degree { got: usize, want: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("malformed element JSON: {0}")]
    Json(String),
}
