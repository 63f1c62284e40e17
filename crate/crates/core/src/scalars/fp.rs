//! Prime fields with a modulus chosen at runtime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{BaseField, FieldKind, Scalar, ScalarError};

/// An element of `GF(p)`, stored as a reduced residue together with `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u32,
    p: u32,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    /// The residue of `v` modulo the prime `p`.
    pub fn new(v: i64, p: u64) -> Result<Self, ScalarError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(ScalarError::BadModulus(p));
        }
        let r = v.rem_euclid(p as i64) as u32;
        Ok(Fp { v: r, p: p as u32 })
    }

    /// The reduced residue in `0..p`.
    pub fn value(&self) -> u32 {
        self.v
    }

    /// The modulus.
    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn with(&self, v: u64) -> Self {
        Fp {
            v: (v % u64::from(self.p)) as u32,
            p: self.p,
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixing residues of different prime fields");
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(mod {})", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        self.with(u64::from(self.v) + u64::from(rhs.v))
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        self.with(u64::from(self.v) + u64::from(self.p) - u64::from(rhs.v))
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        self.with(u64::from(self.v) * u64::from(rhs.v))
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.with(u64::from(self.p) - u64::from(self.v))
    }
}

impl Scalar for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }

    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Fp {
            v: n.rem_euclid(i64::from(self.p)) as u32,
            p: self.p,
        }
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1
    }

    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // Extended Euclid on (v, p).
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(self.v));
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let quo = r0 / r1;
            (r0, r1) = (r1, r0 - quo * r1);
            (s0, s1) = (s1, s0 - quo * s1);
        }
        Some(self.from_i64_like(s0))
    }

    fn characteristic(&self) -> u64 {
        u64::from(self.p)
    }
}

impl BaseField for Fp {
    fn from_kind(field: FieldKind, n: i64) -> Result<Self, ScalarError> {
        match field {
            FieldKind::Prime(p) => Fp::new(n, u64::from(p)),
            FieldKind::Rationals => Err(ScalarError::BadModulus(0)),
        }
    }

    fn parse_in(field: FieldKind, s: &str) -> Result<Self, ScalarError> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| ScalarError::Parse(s.to_string()))?;
        Self::from_kind(field, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_composite_and_large_moduli() {
        assert!(Fp::new(1, 4).is_err());
        assert!(Fp::new(1, 1).is_err());
        assert!(Fp::new(1, (1u64 << 31) + 11).is_err());
        assert!(Fp::new(1, 2147483647).is_ok());
    }

    #[test]
    fn display_is_residue() {
        assert_eq!(Fp::new(-1, 5).unwrap().to_string(), "4");
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0i64..2_147_483_647, b in 0i64..2_147_483_647, c in 0i64..2_147_483_647) {
            let p = 2_147_483_647u64;
            let (a, b, c) = (Fp::new(a, p).unwrap(), Fp::new(b, p).unwrap(), Fp::new(c, p).unwrap());
            prop_assert_eq!((a + b) * c, a * c + b * c);
            prop_assert_eq!(a - a, a.zero_like());
            prop_assert_eq!(a + (-a), a.zero_like());
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), a.one_like());
            }
        }
    }
}
