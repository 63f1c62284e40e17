//! Graded cellular structure of cyclotomic Hecke algebras of type A.
//!
//! The crate realizes the cyclotomic Hecke algebra `H_n(q, Q)` by a sparse
//! normal-form engine on the Ariki-Koike basis `L^a T_w`, builds the KLR
//! generators `e(i)`, `y_r`, `psi_r` inside it, and from them the
//! homogeneous bases `psi_st`, `psi'_st`, graded Specht modules, graded
//! decomposition matrices and the homogeneous trace form.
//!
//! Everything is generic over an exact [`scalars::Scalar`]. The aliases
//! below name the instantiations used in practice.

pub mod combin;
pub mod graded;
pub mod hecke;
pub mod klr;
pub mod linalg;
pub mod seminormal;
pub mod scalars;

pub use scalars::{Fp, Laurent, RatFun, Rational, Scalar};

/// The Hecke algebra over a prime field.
pub type HeckeFp = hecke::Hecke<Fp>;
/// The Hecke algebra over the rationals.
pub type HeckeQ = hecke::Hecke<Rational>;
/// KLR generators over a prime field.
pub type KlrFp = klr::Klr<Fp>;
/// KLR generators over the rationals.
pub type KlrQ = klr::Klr<Rational>;
/// Graded bases and forms over a prime field.
pub type GradedFp = graded::Graded<Fp>;
/// Graded bases and forms over the rationals.
pub type GradedQ = graded::Graded<Rational>;
/// Matrices over a prime field.
pub type MatrixFp = linalg::Matrix<Fp>;
