//! Exact coefficient arithmetic.
//!
//! Three coefficient families are used by the engine: prime fields with a
//! runtime modulus ([`Fp`]), the rationals ([`Rational`]), and univariate
//! rational functions over either of them ([`RatFun`]), which model the
//! discrete valuation ring `K[x]_(x)` and its fraction field. Graded
//! dimensions live in [`Laurent`].
//!
//! The modulus of a prime field is a runtime value, so constants cannot be
//! produced out of thin air. Every [`Scalar`] therefore builds its constants
//! from a witness value of the same field (`zero_like`, `one_like`, ...).

mod fp;
mod laurent;
mod poly;
mod rational;
mod ratfun;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub use fp::Fp;
pub use laurent::{laurent_bar, Laurent};
pub use poly::Poly;
pub use rational::Rational;
pub use ratfun::{specialize_at_zero, valuation_at_zero, RatFun};

use thiserror::Error;

/// Errors raised by scalar construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("modulus {0} is not a prime below 2^31")]
    BadModulus(u64),
    #[error("q must be non-zero")]
    ZeroQ,
    #[error("q = 1 over a field of characteristic 0 has no quantum characteristic")]
    RationalQOne,
    #[error("not integral at x=0")]
    NotIntegral,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

/// An exact field element whose constants are derived from a witness.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The additive identity of the field containing `self`.
    fn zero_like(&self) -> Self;
    /// The multiplicative identity of the field containing `self`.
    fn one_like(&self) -> Self;
    /// The image of the integer `n` in the field containing `self`.
    fn from_i64_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Characteristic of the field containing `self`.
    fn characteristic(&self) -> u64;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// `self / rhs`, `None` when `rhs` is zero.
    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    /// Integer power; negative exponents require an invertible base.
    fn pow_i64(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq.clone();
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * sq;
            }
        }
        Some(acc)
    }
}

/// Description of a base field, used to create scalars from integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// The prime field with the given modulus.
    Prime(u32),
    /// The field of rational numbers.
    Rationals,
}

impl FieldKind {
    /// Characteristic of the field.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldKind::Prime(p) => u64::from(*p),
            FieldKind::Rationals => 0,
        }
    }
}

/// A base field scalar that can be created from a [`FieldKind`].
pub trait BaseField: Scalar {
    /// The integer `n` as an element of `field`.
    fn from_kind(field: FieldKind, n: i64) -> Result<Self, ScalarError>;
    /// Parse the serialized form produced by `Display`.
    fn parse_in(field: FieldKind, s: &str) -> Result<Self, ScalarError>;
}

/// Minimal `e >= 2` with `1 + q + ... + q^(e-1) = 0`, or `0` if there is none.
///
/// Over a prime field the search is bounded by `p` (the multiplicative order
/// of `q` divides `p - 1`, and `q = 1` gives `e = p`). Over the rationals the
/// partial sums never vanish for `q != 1`, and `q = 1` is rejected.
pub fn quantum_characteristic<F: Scalar>(q: &F) -> Result<u64, ScalarError> {
    if q.is_zero() {
        return Err(ScalarError::ZeroQ);
    }
    let p = q.characteristic();
    if p == 0 {
        if q.is_one() {
            return Err(ScalarError::RationalQOne);
        }
        // 1 + q + ... + q^(e-1) = (q^e - 1)/(q - 1) vanishes only if q^e = 1,
        // and the only rational roots of unity are 1 and -1.
        if *q == -q.one_like() {
            return Ok(2);
        }
        return Ok(0);
    }
    let mut sum = q.one_like();
    let mut power = q.one_like();
    for e in 2..=p {
        power = power * q.clone();
        sum = sum + power.clone();
        if sum.is_zero() {
            return Ok(e);
        }
    }
    Ok(0)
}
