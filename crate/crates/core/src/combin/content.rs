//! Contents of nodes in the rational-function lift and the scalars
//! `gamma_t`, `gamma'_t`.

use super::degree::node_sets;
use super::partition::Node;
use super::quiver::QuiverData;
use super::tableau::StandardTableau;
use crate::scalars::{RatFun, Scalar};

/// The content rule of a lift: base parameter `q`, quantum characteristic
/// `e` and multicharge `kappa`, all over the base field of `q`.
#[derive(Debug, Clone)]
pub struct ContentRule<F: Scalar> {
    q: F,
    quiver: QuiverData,
}

impl<F: Scalar> ContentRule<F> {
    pub fn new(q: F, quiver: QuiverData) -> Self {
        ContentRule { q, quiver }
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn quiver(&self) -> &QuiverData {
        &self.quiver
    }

    /// Is this the degenerate case `q = 1`?
    pub fn degenerate(&self) -> bool {
        self.q.is_one()
    }

    fn x(&self) -> RatFun<F> {
        RatFun::x(&self.q)
    }

    fn constant(&self, c: F) -> RatFun<F> {
        RatFun::constant(c)
    }

    fn int(&self, n: i64) -> RatFun<F> {
        self.constant(self.q.from_i64_like(n))
    }

    /// `(x + q)^k`, or `q^k` as a constant in the non-shifted cases.
    fn x_plus_q_pow(&self, k: i64) -> RatFun<F> {
        let base = self.x() + self.constant(self.q.clone());
        base.pow_i64(k).expect("x + q is invertible")
    }

    /// The lifted parameter `v`.
    pub fn v(&self) -> RatFun<F> {
        if !self.degenerate() && self.quiver.e() > 0 {
            self.x() + self.constant(self.q.clone())
        } else {
            self.constant(self.q.clone())
        }
    }

    /// The content of the node `(r, c, l)`.
    pub fn content(&self, node: &Node) -> RatFun<F> {
        let kappa = self.quiver.multicharge()[node.l - 1];
        let d = node.c as i64 - node.r as i64;
        match (self.degenerate(), self.quiver.e() > 0) {
            (false, true) => self.x_plus_q_pow(d + kappa),
            (false, false) => {
                let qd = self.q.pow_i64(d).expect("q is invertible");
                let qk = self.q.pow_i64(kappa).expect("q is invertible");
                let xl = self.x().pow_i64(node.l as i64).expect("positive power");
                self.constant(qd) * (xl + self.constant(qk))
            }
            (true, true) => self.int(d + kappa),
            (true, false) => self.int(d + kappa) + self.int(node.l as i64) * self.x(),
        }
    }

    /// The lifted cyclotomic parameter `Q^O_r`, the content of `(1, 1, r)`.
    pub fn lifted_parameter(&self, r: usize) -> RatFun<F> {
        self.content(&Node::new(1, 1, r))
    }

    /// `cont_t(k)`, the content of the node `t^{-1}(k)`.
    pub fn content_at(&self, t: &StandardTableau, k: usize) -> RatFun<F> {
        self.content(&t.node_of(k))
    }

    /// The contents of `t^{-1}(1), ..., t^{-1}(n)`.
    pub fn content_seq(&self, t: &StandardTableau) -> Vec<RatFun<F>> {
        (1..=t.size()).map(|k| self.content_at(t, k)).collect()
    }

    fn product(&self, t: &StandardTableau, above: bool) -> RatFun<F> {
        let mut acc = self.int(1);
        for k in 1..=t.size() {
            let sets = node_sets(t, k, &self.quiver);
            let (add, rem) = if above {
                (&sets.addable_above, &sets.removable_above)
            } else {
                (&sets.addable_below, &sets.removable_below)
            };
            let ck = self.content_at(t, k);
            for a in add {
                acc = acc * (ck.clone() - self.content(a));
            }
            for r in rem {
                let d = ck.clone() - self.content(r);
                acc = acc * d.inv().expect("gamma denominators are non-zero");
            }
        }
        acc
    }

    /// `gamma_t = v^{l(d(t)) + delta(lambda)} prod_k prod_A (cont_t(k) -
    /// cont(alpha)) / prod_R (cont_t(k) - cont(rho))`.
    pub fn gamma(&self, t: &StandardTableau) -> RatFun<F> {
        let e = (t.d_perm().length() as i64) + t.shape().delta();
        self.v().pow_i64(e).expect("v is invertible") * self.product(t, false)
    }

    /// `gamma'_t`, built from the "above" node sets of the conjugate tableau.
    pub fn gamma_prime(&self, t: &StandardTableau) -> RatFun<F> {
        let e = (t.d_perm().length() as i64) + t.shape().delta();
        self.v().pow_i64(-e).expect("v is invertible") * self.product(&t.conjugate(), true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::partition::{multipartitions, Multipartition};
    use crate::combin::tableau::standard_tableaux;
    use crate::scalars::{specialize_at_zero, valuation_at_zero, Fp, Poly, Rational};

    fn rule(e: u64, kappa: Vec<i64>, q: i64, p: u64) -> ContentRule<Fp> {
        ContentRule::new(Fp::new(q, p).unwrap(), QuiverData::new(e, kappa).unwrap())
    }

    #[test]
    fn content_examples() {
        let r = rule(2, vec![0], 4, 5);
        let w = Fp::new(0, 5).unwrap();
        assert!(r.content(&Node::new(1, 1, 1)).is_one());
        let xq = RatFun::new(Poly::new(vec![w.from_i64_like(4), w.from_i64_like(1)], &w), Poly::constant(w.from_i64_like(1)));
        assert_eq!(r.content(&Node::new(2, 1, 1)), xq.inv().unwrap());
        let deg = rule(5, vec![3], 1, 5);
        assert_eq!(deg.content(&Node::new(1, 2, 1)).as_constant(), Some(w.from_i64_like(4)));
    }

    #[test]
    fn content_specializes_to_residue_parameter() {
        for (e, kappa, q, p) in [(2, vec![4, 0], 4, 5), (3, vec![6, 0], 2, 7), (4, vec![0], 2, 5)] {
            let r = rule(e, kappa.clone(), q, p);
            let qd = QuiverData::new(e, kappa).unwrap();
            for lam in multipartitions(3, qd.level()) {
                for node in lam.nodes() {
                    let res = qd.residue(node.r, node.c, node.l);
                    let c = r.content(&node);
                    assert_eq!(specialize_at_zero(&c).unwrap(), r.q().pow_i64(res).unwrap());
                }
            }
        }
    }

    #[test]
    fn gamma_example() {
        let r = rule(2, vec![0], 4, 5);
        let w = Fp::new(0, 5).unwrap();
        let t = crate::combin::tableau::StandardTableau::initial(&"1".parse::<Multipartition>().unwrap());
        let want = RatFun::new(
            Poly::new(vec![w.from_i64_like(3), w.from_i64_like(1)], &w),
            Poly::new(vec![w.from_i64_like(4), w.from_i64_like(1)], &w),
        );
        assert_eq!(r.gamma(&t), want);
    }

    #[test]
    fn gamma_is_nonzero_with_finite_valuation() {
        let q = Rational::from_i64(2);
        let r = ContentRule::new(q, QuiverData::new(0, vec![0, 5]).unwrap());
        for lam in multipartitions(3, 2) {
            for t in standard_tableaux(&lam) {
                assert!(valuation_at_zero(&r.gamma(&t)).is_some());
                assert!(valuation_at_zero(&r.gamma_prime(&t)).is_some());
            }
        }
    }
}
