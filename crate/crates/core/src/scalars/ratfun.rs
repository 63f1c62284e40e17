//! Rational functions in one indeterminate `x`, the fraction field of the
//! local ring `K[x]_(x)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Poly, Scalar, ScalarError};

/// A reduced fraction `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFun<F: Scalar> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Scalar> RatFun<F> {
    /// Normalize `num / den`; panics if `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun {
                den: Poly::constant(den.unit().clone()),
                num,
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let l = den.leading().cloned().expect("non-zero denominator");
        if !l.is_one() {
            let li = l.inv().expect("non-zero leading coefficient");
            num = num.scale(&li);
            den = den.scale(&li);
        }
        RatFun { num, den }
    }

    /// The constant function `c`.
    pub fn constant(c: F) -> Self {
        let one = c.one_like();
        RatFun {
            num: Poly::constant(c),
            den: Poly::constant(one),
        }
    }

    /// The indeterminate `x` over the field of `witness`.
    pub fn x(witness: &F) -> Self {
        RatFun::new(Poly::monomial(1, witness), Poly::constant(witness.one_like()))
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let one = Poly::constant(p.unit().clone());
        RatFun::new(p, one)
    }

    pub fn numerator(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<F> {
        &self.den
    }

    /// A base-field witness (the constant one).
    pub fn base_unit(&self) -> &F {
        self.den.unit()
    }

    /// Is this a constant function?
    pub fn as_constant(&self) -> Option<F> {
        if self.den.degree() == Some(0) && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }
}

/// Order of vanishing at `x = 0`; `None` stands for `+infinity` (the zero
/// function).
pub fn valuation_at_zero<F: Scalar>(f: &RatFun<F>) -> Option<i64> {
    let n = f.num.low_degree()? as i64;
    let d = f.den.low_degree().expect("non-zero denominator") as i64;
    Some(n - d)
}

/// The value at `x = 0`, defined when the valuation is non-negative.
pub fn specialize_at_zero<F: Scalar>(f: &RatFun<F>) -> Result<F, ScalarError> {
    let d0 = f.den.coeff(0);
    if d0.is_zero() {
        return Err(ScalarError::NotIntegral);
    }
    Ok(f.num.coeff(0).div(&d0).expect("non-zero constant term"))
}

impl<F: Scalar> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl<F: Scalar> Add for RatFun<F> {
    type Output = RatFun<F>;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return RatFun::new(self.num.add(&rhs.num), self.den);
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RatFun::new(num, self.den.mul(&rhs.den))
    }
}

impl<F: Scalar> Sub for RatFun<F> {
    type Output = RatFun<F>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Scalar> Mul for RatFun<F> {
    type Output = RatFun<F>;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return self.zero_like();
        }
        RatFun::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<F: Scalar> Neg for RatFun<F> {
    type Output = RatFun<F>;
    fn neg(self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl<F: Scalar> Scalar for RatFun<F> {
    fn zero_like(&self) -> Self {
        RatFun::constant(self.base_unit().zero_like())
    }

    fn one_like(&self) -> Self {
        RatFun::constant(self.base_unit().clone())
    }

    fn from_i64_like(&self, n: i64) -> Self {
        RatFun::constant(self.base_unit().from_i64_like(n))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den.degree() == Some(0) && self.num == self.den
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFun::new(self.den.clone(), self.num.clone()))
        }
    }

    fn characteristic(&self) -> u64 {
        self.base_unit().characteristic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, Rational};
    use proptest::prelude::*;

    fn w() -> Fp {
        Fp::new(0, 5).unwrap()
    }

    fn poly(c: &[i64]) -> Poly<Fp> {
        Poly::new(c.iter().map(|&v| w().from_i64_like(v)).collect(), &w())
    }

    #[test]
    fn valuation_examples() {
        let x2_over = RatFun::new(poly(&[0, 0, 1]), poly(&[1, 1]));
        assert_eq!(valuation_at_zero(&x2_over), Some(2));
        let inv_x = RatFun::new(poly(&[1]), poly(&[0, 1]));
        assert_eq!(valuation_at_zero(&inv_x), Some(-1));
        assert_eq!(valuation_at_zero(&inv_x.zero_like()), None);
    }

    #[test]
    fn specialize_examples() {
        let f = RatFun::new(poly(&[4, 1]), poly(&[1, 1]));
        assert_eq!(specialize_at_zero(&f).unwrap(), w().from_i64_like(4));
        let x2 = RatFun::from_poly(poly(&[0, 0, 1]));
        assert!(specialize_at_zero(&x2).unwrap().is_zero());
        let inv_x = RatFun::new(poly(&[1]), poly(&[0, 1]));
        assert_eq!(specialize_at_zero(&inv_x), Err(ScalarError::NotIntegral));
    }

    #[test]
    fn normal_form_is_canonical() {
        let a = RatFun::new(poly(&[2, 2]), poly(&[3, 3]));
        assert_eq!(a, RatFun::constant(w().from_i64_like(2) * w().from_i64_like(3).inv().unwrap()));
        assert_eq!(a.to_string(), "(4*x^0)/(1*x^0)");
    }

    fn rat_poly(c: &[i64]) -> Poly<Rational> {
        let w = Rational::from_i64(0);
        Poly::new(c.iter().map(|&v| Rational::from_i64(v)).collect(), &w)
    }

    proptest! {
        #[test]
        fn valuation_is_additive(a in proptest::collection::vec(-4i64..5, 1..4),
                                 b in proptest::collection::vec(-4i64..5, 1..4),
                                 c in proptest::collection::vec(-4i64..5, 1..4),
                                 d in proptest::collection::vec(-4i64..5, 1..4)) {
            let (pa, pb, pc, pd) = (rat_poly(&a), rat_poly(&b), rat_poly(&c), rat_poly(&d));
            prop_assume!(!pa.is_zero() && !pb.is_zero() && !pc.is_zero() && !pd.is_zero());
            let f = RatFun::new(pa, pb);
            let g = RatFun::new(pc, pd);
            let vf = valuation_at_zero(&f).unwrap();
            let vg = valuation_at_zero(&g).unwrap();
            prop_assert_eq!(valuation_at_zero(&(f.clone() * g.clone())), Some(vf + vg));
            if vf >= 0 && vg >= 0 {
                let sf = specialize_at_zero(&f).unwrap();
                let sg = specialize_at_zero(&g).unwrap();
                prop_assert_eq!(specialize_at_zero(&(f.clone() * g.clone())).unwrap(), sf.clone() * sg.clone());
                prop_assert_eq!(specialize_at_zero(&(f + g)).unwrap(), sf + sg);
            }
        }

        #[test]
        fn field_axioms(a in proptest::collection::vec(-4i64..5, 1..4),
                        b in proptest::collection::vec(-4i64..5, 1..4),
                        c in proptest::collection::vec(-4i64..5, 1..4)) {
            let f = RatFun::from_poly(rat_poly(&a));
            let g = RatFun::from_poly(rat_poly(&b));
            let h = RatFun::from_poly(rat_poly(&c));
            prop_assert_eq!((f.clone() + g.clone()) * h.clone(), f.clone() * h.clone() + g.clone() * h.clone());
            if !f.is_zero() {
                prop_assert!((f.clone() * f.inv().unwrap()).is_one());
            }
            prop_assert!((f.clone() - f).is_zero());
        }
    }
}
