//! Dense univariate polynomials over a field.

use std::fmt;

use super::Scalar;

/// A polynomial `c_0 + c_1 x + ... + c_d x^d` with no trailing zero
/// coefficients. The field is remembered through `unit`, the constant one.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Scalar> {
    coeffs: Vec<F>,
    unit: F,
}

impl<F: Scalar> Poly<F> {
    /// Build from low-to-high coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<F>, witness: &F) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            unit: witness.one_like(),
        }
    }

    pub fn zero(witness: &F) -> Self {
        Poly::new(Vec::new(), witness)
    }

    pub fn constant(c: F) -> Self {
        let w = c.clone();
        Poly::new(vec![c], &w)
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize, witness: &F) -> Self {
        let mut coeffs = vec![witness.zero_like(); k + 1];
        coeffs[k] = witness.one_like();
        Poly::new(coeffs, witness)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn unit(&self) -> &F {
        &self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Index of the lowest non-zero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.unit.zero_like())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Poly::new(c, &self.unit)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Poly::new(c, &self.unit)
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|a| -a.clone()).collect();
        Poly::new(c, &self.unit)
    }

    pub fn scale(&self, s: &F) -> Self {
        let c = self.coeffs.iter().map(|a| a.clone() * s.clone()).collect();
        Poly::new(c, &self.unit)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.unit);
        }
        let mut c = vec![self.unit.zero_like(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(c, &self.unit)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by the zero polynomial");
        let dinv = dl.inv().expect("leading coefficient is invertible");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(&self.unit), self.clone());
        }
        let mut q = vec![self.unit.zero_like(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * dinv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * b.clone();
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q, &self.unit), Poly::new(r, &self.unit))
    }

    /// Scale to a monic polynomial (the zero polynomial is returned as is).
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("non-zero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let w = &self.unit;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::constant(w.one_like()), Poly::zero(w));
        let (mut t0, mut t1) = (Poly::zero(w), Poly::constant(w.one_like()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.leading() {
            Some(l) => {
                let li = l.inv().expect("non-zero leading coefficient");
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
            None => (r0, s0, t0),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::constant(self.unit.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation at a field element.
    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(self.unit.zero_like(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl<F: Scalar> fmt::Display for Poly<F> {
    /// Sparse sum form `c*x^k + ...`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*x^{}", c, k)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Fp;

    fn p(c: &[i64]) -> Poly<Fp> {
        let w = Fp::new(0, 7).unwrap();
        Poly::new(c.iter().map(|&v| w.from_i64_like(v)).collect(), &w)
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[3, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[2, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g, p(&[1]));
    }

    #[test]
    fn display_sparse() {
        assert_eq!(p(&[3, 0, 1]).to_string(), "3*x^0 + 1*x^2");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
