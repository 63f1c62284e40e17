//! The rational numbers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{BaseField, FieldKind, Scalar, ScalarError};

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The fraction `a / b`; panics if `b` is zero.
    pub fn from_frac(a: i64, b: i64) -> Self {
        Rational(BigRational::new(BigInt::from(a), BigInt::from(b)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational(BigRational::zero())
    }

    fn one_like(&self) -> Self {
        Rational(BigRational::one())
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_i64(n)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }
}

impl BaseField for Rational {
    fn from_kind(field: FieldKind, n: i64) -> Result<Self, ScalarError> {
        match field {
            FieldKind::Rationals => Ok(Rational::from_i64(n)),
            FieldKind::Prime(p) => Err(ScalarError::BadModulus(u64::from(p))),
        }
    }

    fn parse_in(field: FieldKind, s: &str) -> Result<Self, ScalarError> {
        if field != FieldKind::Rationals {
            return Err(ScalarError::Parse(s.to_string()));
        }
        let bad = || ScalarError::Parse(s.to_string());
        let (a, b) = match s.trim().split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        let a: BigInt = a.parse().map_err(|_| bad())?;
        let b: BigInt = b.parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn serializes_as_fraction() {
        assert_eq!(Rational::from_frac(6, -4).to_string(), "-3/2");
        assert_eq!(Rational::from_i64(3).to_string(), "3/1");
        let r = Rational::parse_in(FieldKind::Rationals, "-3/2").unwrap();
        assert_eq!(r, Rational::from_frac(-3, 2));
    }

    proptest! {
        #[test]
        fn field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = Rational::from_frac(a, b);
            let y = Rational::from_frac(c, d);
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!((x.clone() + y.clone()) - y.clone(), x.clone());
            if !x.is_zero() {
                prop_assert!(x.clone() * x.inv().unwrap() == x.one_like());
            }
        }
    }
}
