//! Sparse elements of the Hecke algebra on the Ariki-Koike basis.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::scalars::Scalar;

/// A finitely supported coefficient map on basis labels.
///
/// A label encodes the basis element `L_1^{a_1} ... L_n^{a_n} T_w` as
/// `a_index * n! + w_index`, where `a_index` reads `(a_1, ..., a_n)` as a
/// base-`l` number with `a_1` most significant and `w_index` is the position
/// of `w` in the lexicographic list of one-line permutations. The label order
/// is therefore `a` lexicographic, then `w` lexicographic. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<F> {
    terms: BTreeMap<usize, F>,
}

impl<F: Scalar> Default for Element<F> {
    fn default() -> Self {
        Element::zero()
    }
}

impl<F: Scalar> Element<F> {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    /// The single term `c * b_label`.
    pub fn single(label: usize, c: F) -> Self {
        let mut e = Element::zero();
        e.add_term(label, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c * b_label` in place, dropping the label if it cancels.
    pub fn add_term(&mut self, label: usize, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(old) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&label);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(label, c);
            }
        }
    }

    /// Add `c * other` in place.
    pub fn add_scaled(&mut self, other: &Element<F>, c: &F) {
        if c.is_zero() {
            return;
        }
        for (&l, v) in &other.terms {
            self.add_term(l, v.clone() * c.clone());
        }
    }

    /// The coefficient of `b_label`, if non-zero.
    pub fn coeff(&self, label: usize) -> Option<&F> {
        self.terms.get(&label)
    }

    /// Terms in label order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> + '_ {
        self.terms.iter().map(|(&l, c)| (l, c))
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(&l, v)| (l, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Apply `f` to every coefficient, dropping results that vanish.
    pub fn try_map<G: Scalar, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<Element<G>, E> {
        let mut out = Element::zero();
        for (&l, v) in &self.terms {
            out.add_term(l, f(v)?);
        }
        Ok(out)
    }

    /// Apply an infallible coefficient map.
    pub fn map<G: Scalar>(&self, mut f: impl FnMut(&F) -> G) -> Element<G> {
        let mut out = Element::zero();
        for (&l, v) in &self.terms {
            out.add_term(l, f(v));
        }
        out
    }
}

impl<F: Scalar> Add for Element<F> {
    type Output = Element<F>;
    fn add(mut self, rhs: Element<F>) -> Element<F> {
        for (l, v) in rhs.terms {
            self.add_term(l, v);
        }
        self
    }
}

impl<F: Scalar> Sub for Element<F> {
    type Output = Element<F>;
    fn sub(mut self, rhs: Element<F>) -> Element<F> {
        for (l, v) in rhs.terms {
            self.add_term(l, -v);
        }
        self
    }
}

impl<F: Scalar> Neg for Element<F> {
    type Output = Element<F>;
    fn neg(self) -> Element<F> {
        Element {
            terms: self.terms.into_iter().map(|(l, v)| (l, -v)).collect(),
        }
    }
}

impl<'a, F: Scalar> Add<&'a Element<F>> for &'a Element<F> {
    type Output = Element<F>;
    fn add(self, rhs: &Element<F>) -> Element<F> {
        self.clone() + rhs.clone()
    }
}

impl<'a, F: Scalar> Sub<&'a Element<F>> for &'a Element<F> {
    type Output = Element<F>;
    fn sub(self, rhs: &Element<F>) -> Element<F> {
        self.clone() - rhs.clone()
    }
}
