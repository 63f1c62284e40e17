//! Graded cellular analysis of the cyclotomic Hecke algebra through the
//! homogeneous bases `psi_st` and `psi'_st`.
//!
//! [`Graded`] builds the `psi` basis of the whole algebra once and solves
//! coordinates against it. Everything graded is read off from those
//! coordinates: degrees and homogeneity, the graded star `psi_st -> psi_ts`,
//! graded Specht modules with their Gram forms, characters of the graded
//! simple modules, graded decomposition and Cartan matrices, and the
//! homogeneous trace form `tau_beta` on each block.

mod basis;
mod cells;
mod decomp;
mod trace;

pub use basis::{pairs_of, Basis, BasisExpansion, Block, Graded, Pair, DEFAULT_MAX_DIM};
pub use cells::{CellModule, Character, Generator, GramMatrix};
pub use decomp::{LaurentMatrix, UngradedDecomposition};
pub use trace::{DualityReport, PairMatrix};

use thiserror::Error;

use crate::hecke::HeckeError;
use crate::klr::KlrError;

/// Errors raised by the graded analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error(transparent)]
    Klr(#[from] KlrError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error("the psi basis needs q != 1")]
    Degenerate,
    #[error("algebra of dimension {dim} exceeds the cap {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("the zero element has no degree")]
    Zero,
    #[error("element does not lie in the block {0}")]
    NotInBlock(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("the {0} elements do not form a basis")]
    Singular(&'static str),
    #[error("theorem violation: {0}")]
    Theorem(String),
}

#[cfg(test)]
mod tests;
