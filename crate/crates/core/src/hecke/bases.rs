//! The Murphy basis `m_st`, the dual Murphy basis `n_st`, and the
//! semisimplicity criterion.

use super::algebra::{Hecke, HeckeParams};
use super::element::Element;
use super::HeckeError;
use crate::combin::{Multipartition, Perm, StandardTableau};
use crate::scalars::{quantum_characteristic, Scalar};

impl<F: Scalar> Hecke<F> {
    fn check_shape(&self, lam: &Multipartition) -> Result<(), HeckeError> {
        if lam.size() != self.n() || lam.level() != self.level() {
            return Err(HeckeError::Shape(format!(
                "{} is not a multipartition of {} with {} components",
                lam,
                self.n(),
                self.level()
            )));
        }
        Ok(())
    }

    fn check_pair(&self, s: &StandardTableau, t: &StandardTableau) -> Result<(), HeckeError> {
        if s.shape() != t.shape() {
            return Err(HeckeError::Shape(format!(
                "tableaux of shapes {} and {}",
                s.shape(),
                t.shape()
            )));
        }
        self.check_shape(s.shape())
    }

    /// The row stabilizer of `t^lambda`, as group indices.
    pub fn row_stabilizer(&self, lam: &Multipartition) -> Vec<usize> {
        let t = StandardTableau::initial(lam);
        let n = self.n();
        let mut row_of = vec![0usize; n + 1];
        let mut r = 0;
        for comp in t.rows() {
            for row in comp {
                for &k in row {
                    row_of[k] = r;
                }
                r += 1;
            }
        }
        (0..self.group().order())
            .filter(|&w| {
                let p: &Perm = self.group().perm(w);
                (1..=n).all(|k| row_of[p.image(k)] == row_of[k])
            })
            .collect()
    }

    /// `prod_k (L_k - c)` for `k = 1..=m`, applied on the left of `x`.
    fn l_factors(&self, m: usize, c: &F, x: Element<F>) -> Element<F> {
        let mut acc = x;
        for k in 1..=m {
            let lx = self.lmul_l(k, &acc);
            acc = lx - acc.scale(c);
        }
        acc
    }

    /// `m_lambda = prod_{s=2}^{l} prod_{k <= |lam^(1)| + ... + |lam^(s-1)|}
    /// (L_k - Q_s) * sum_{w in Sym_lambda} T_w`.
    pub fn m_lambda(&self, lam: &Multipartition) -> Result<Element<F>, HeckeError> {
        self.check_shape(lam)?;
        let mut x = Element::zero();
        for w in self.row_stabilizer(lam) {
            x.add_term(w, self.scalar(1));
        }
        let sizes: Vec<usize> = lam.components().iter().map(|c| c.iter().sum()).collect();
        let big_q = self.params().parameters();
        for s in 2..=self.level() {
            let m: usize = sizes[..s - 1].iter().sum();
            x = self.l_factors(m, &big_q[s - 1], x);
        }
        Ok(x)
    }

    /// `m_st = T_{d(s)^{-1}} m_lambda T_{d(t)}`.
    pub fn m_st(&self, s: &StandardTableau, t: &StandardTableau) -> Result<Element<F>, HeckeError> {
        self.check_pair(s, t)?;
        let m = self.m_lambda(s.shape())?;
        Ok(self.sandwich(s, &m, t))
    }

    /// `T_{d(s)^{-1}} x T_{d(t)}`.
    fn sandwich(&self, s: &StandardTableau, x: &Element<F>, t: &StandardTableau) -> Element<F> {
        let ws: Vec<usize> = s.d_word().into_iter().rev().collect();
        let y = self.lmul_word(&ws, x);
        self.rmul_word(&y, &t.d_word())
    }

    /// `n_lambda = prod_{s=1}^{l-1} prod_{k <= |lam^(1)| + ... + |lam^(l-s)|}
    /// (L_k - Q_s) * sum_{w in Sym_lambda} (-q)^{-l(w)} T_w`.
    pub fn n_lambda(&self, lam: &Multipartition) -> Result<Element<F>, HeckeError> {
        self.check_shape(lam)?;
        let mq_inv = (-self.params().q().clone()).inv().expect("q is invertible");
        let mut x = Element::zero();
        for w in self.row_stabilizer(lam) {
            let c = mq_inv.pow_i64(self.group().length(w) as i64).expect("power");
            x.add_term(w, c);
        }
        let sizes: Vec<usize> = lam.components().iter().map(|c| c.iter().sum()).collect();
        let l = self.level();
        let big_q = self.params().parameters();
        for s in 1..l {
            let m: usize = sizes[..l - s].iter().sum();
            x = self.l_factors(m, &big_q[s - 1], x);
        }
        Ok(x)
    }

    /// `n_st = (-q)^{-l(d(s)) - l(d(t))} T_{d(s)^{-1}} n_lambda T_{d(t)}`.
    pub fn n_st(&self, s: &StandardTableau, t: &StandardTableau) -> Result<Element<F>, HeckeError> {
        self.check_pair(s, t)?;
        let nl = self.n_lambda(s.shape())?;
        let e = -((s.d_word().len() + t.d_word().len()) as i64);
        let c = (-self.params().q().clone()).pow_i64(e).expect("q is invertible");
        Ok(self.sandwich(s, &nl, t).scale(&c))
    }
}

/// The semisimplicity criterion: `e = 0` or `e > n`, and the parameter
/// product `prod_{r<s} prod_{|d|<n} (q^d Q_r - Q_s)` (or `d + Q_r - Q_s`
/// when `q = 1`) is non-zero.
pub fn is_semisimple<F: Scalar>(params: &HeckeParams<F>) -> bool {
    let n = params.n() as i64;
    let q = params.q();
    let e = match quantum_characteristic(q) {
        Ok(e) => e as i64,
        // q = 1 in characteristic zero: no relation 1 + ... + 1 = 0
        Err(_) => 0,
    };
    if e != 0 && e <= n {
        return false;
    }
    let qs = params.parameters();
    for r in 0..qs.len() {
        for s in r + 1..qs.len() {
            for d in (1 - n)..n {
                let f = if params.degenerate() {
                    q.from_i64_like(d) + qs[r].clone() - qs[s].clone()
                } else {
                    q.pow_i64(d).expect("q is invertible") * qs[r].clone() - qs[s].clone()
                };
                if f.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

impl<F: Scalar> Hecke<F> {
    /// The eigenvalue attached to a node: `q^{c-r} Q_l`, or `c - r + Q_l`
    /// when `q = 1`.
    pub fn node_parameter(&self, node: &crate::combin::Node) -> F {
        let d = node.c as i64 - node.r as i64;
        let ql = self.params().parameters()[node.l - 1].clone();
        if self.params().degenerate() {
            self.scalar(d) + ql
        } else {
            self.params().q().pow_i64(d).expect("q is invertible") * ql
        }
    }
}
