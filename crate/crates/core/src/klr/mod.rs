//! The KLR generators `e(i)`, `y_r` and `psi_r` realized inside the
//! cyclotomic Hecke algebra, the full KLR relation suite, and the
//! homogeneous elements `e_lambda y_lambda`, `psi_st`, `psi'_st`,
//! `z_n^{+-,s}` and `z_lambda` built from them.
//!
//! The idempotents are projections onto generalized eigenspaces of the
//! Jucys-Murphy elements, obtained from interpolation polynomials. The
//! `psi_r` are assembled from power series in `y_r, y_{r+1}` that are
//! evaluated exactly on each weight space, where the `y` are nilpotent.

mod config;
mod elements;
mod generators;
mod relations;

pub use config::{KlrCase, KlrConfig};
pub use elements::ZnsCheck;
pub use generators::Klr;
pub use relations::{RelationCheck, RelationReport};

use thiserror::Error;

use crate::combin::QuiverError;
use crate::hecke::HeckeError;
use crate::scalars::ScalarError;
use crate::seminormal::SeminormalError;

/// Errors raised while building or checking KLR generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KlrError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Seminormal(#[from] SeminormalError),
    #[error("q has quantum characteristic {got}, but the quiver has e = {want}")]
    Characteristic { got: u64, want: u64 },
    #[error("{0} requires q != 1")]
    Degenerate(&'static str),
    #[error("index {index} out of range 1..={max}")]
    Index { index: usize, max: usize },
    #[error("y_{0} is not nilpotent")]
    NotNilpotent(usize),
    #[error("Q_{r}(i) has zero constant term on the non-zero weight space i = {i:?}")]
    ZeroConstant { r: usize, i: Vec<i64> },
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("theorem violation: {0}")]
    Theorem(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

#[cfg(test)]
mod tests;

