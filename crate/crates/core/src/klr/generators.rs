//! Construction of `e(i)`, `y_r` and `psi_r`.

use std::collections::BTreeMap;

use super::config::KlrConfig;
use super::KlrError;
use crate::combin::Residue;
use crate::hecke::{Element, Hecke};
use crate::scalars::{Poly, Scalar};
use crate::seminormal::Lift;

/// The KLR generators of a cyclotomic Hecke algebra.
///
/// Built once and read-only afterwards. Only the non-zero idempotents are
/// stored; `psi_r` is available when `q != 1`.
#[derive(Debug)]
pub struct Klr<F: Scalar> {
    config: KlrConfig<F>,
    hecke: Hecke<F>,
    idem: BTreeMap<Vec<Residue>, Element<F>>,
    crt_power: usize,
    y: Vec<Element<F>>,
    nilpotency: Vec<usize>,
    psi: Vec<Element<F>>,
}

/// How `i_{r+1}` sits relative to `i_r` in the quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Adjacency {
    Equal,
    Unlinked,
    /// `i_{r+1} = i_r + 1` with `e != 2`.
    Up,
    /// `i_{r+1} = i_r - 1` with `e != 2`.
    Down,
    /// `i_{r+1} = i_r + 1 = i_r - 1`, only possible when `e = 2`.
    Double,
}

impl<F: Scalar> Klr<F> {
    pub fn new(config: KlrConfig<F>) -> Result<Self, KlrError> {
        let hecke = Hecke::new(config.params().clone());
        let mut klr = Klr {
            config,
            hecke,
            idem: BTreeMap::new(),
            crt_power: 0,
            y: Vec::new(),
            nilpotency: Vec::new(),
            psi: Vec::new(),
        };
        klr.build_idempotents()?;
        klr.build_y()?;
        if !klr.config.degenerate() {
            klr.build_psi()?;
        }
        Ok(klr)
    }

    pub fn config(&self) -> &KlrConfig<F> {
        &self.config
    }

    pub fn hecke(&self) -> &Hecke<F> {
        &self.hecke
    }

    pub fn n(&self) -> usize {
        self.config.n()
    }

    fn scalar(&self, v: i64) -> F {
        self.hecke.scalar(v)
    }

    // ---- idempotents ------------------------------------------------------

    /// The interpolation polynomial that is `1` modulo `(X - q_i)^N` and `0`
    /// modulo `(X - q_j)^N` for the other residues `j`.
    fn interpolation(&self, i: Residue, others: &[Residue], power: usize) -> Poly<F> {
        let w = self.scalar(0);
        let linear = |j: Residue| Poly::new(vec![-self.config.q_res(j), w.one_like()], &w);
        let a = linear(i).pow(power as u32);
        let mut b = Poly::constant(w.one_like());
        for &j in others {
            b = b.mul(&linear(j).pow(power as u32));
        }
        let (g, _, t) = a.xgcd(&b);
        debug_assert!(g.degree() == Some(0), "distinct eigenvalues are coprime");
        let p = t.mul(&b);
        p.divrem(&a.mul(&b)).1
    }

    /// `p(L_k)` by Horner's rule.
    fn eval_at_l(&self, k: usize, p: &Poly<F>) -> Element<F> {
        let h = &self.hecke;
        let mut acc = Element::zero();
        for c in p.coeffs().iter().rev() {
            acc = h.lmul_l(k, &acc);
            acc.add_term(0, c.clone());
        }
        acc
    }

    fn build_idempotents(&mut self) -> Result<(), KlrError> {
        let n = self.n();
        let res = self.config.residues();
        let cap = self.hecke.dim().max(1);
        let mut power = n.max(1);
        loop {
            let mut factors: Vec<Vec<Element<F>>> = Vec::with_capacity(n);
            for k in 1..=n {
                let row = res
                    .iter()
                    .map(|&i| {
                        let others: Vec<Residue> = res.iter().copied().filter(|&j| j != i).collect();
                        self.eval_at_l(k, &self.interpolation(i, &others, power))
                    })
                    .collect();
                factors.push(row);
            }
            let mut table = BTreeMap::new();
            self.expand_idempotents(&factors, &res, Vec::new(), self.hecke.one(), &mut table);
            if self.idempotents_ok(&table) {
                self.idem = table;
                self.crt_power = power;
                return Ok(());
            }
            if power >= cap {
                return Err(KlrError::Consistency(
                    "interpolation idempotents do not stabilize".into(),
                ));
            }
            power = (2 * power).min(cap);
        }
    }

    fn expand_idempotents(
        &self,
        factors: &[Vec<Element<F>>],
        res: &[Residue],
        prefix: Vec<Residue>,
        acc: Element<F>,
        table: &mut BTreeMap<Vec<Residue>, Element<F>>,
    ) {
        let k = prefix.len();
        if k == factors.len() {
            table.insert(prefix, acc);
            return;
        }
        for (pos, &i) in res.iter().enumerate() {
            let next = self.hecke.mul(&acc, &factors[k][pos]);
            if next.is_zero() {
                continue;
            }
            let mut p = prefix.clone();
            p.push(i);
            self.expand_idempotents(factors, res, p, next, table);
        }
    }

    fn idempotents_ok(&self, table: &BTreeMap<Vec<Residue>, Element<F>>) -> bool {
        let h = &self.hecke;
        let mut sum = Element::zero();
        for e in table.values() {
            if h.mul(e, e) != *e {
                return false;
            }
            sum = sum + e.clone();
        }
        sum == h.one()
    }

    /// The exponent `N` of the interpolation congruences that was needed.
    pub fn crt_power(&self) -> usize {
        self.crt_power
    }

    /// `e(i)`, zero when the weight space is zero.
    pub fn e_idem(&self, i: &[Residue]) -> Element<F> {
        let key: Vec<Residue> = i.iter().map(|&r| self.config.quiver().reduce(r)).collect();
        self.idem.get(&key).cloned().unwrap_or_else(Element::zero)
    }

    /// The residue sequences with `e(i) != 0`, in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &Vec<Residue>> + '_ {
        self.idem.keys()
    }

    /// Every sequence of candidate residues of length `n`.
    pub fn all_sequences(&self) -> Vec<Vec<Residue>> {
        let res = self.config.residues();
        let mut out = vec![Vec::new()];
        for _ in 0..self.n() {
            out = out
                .into_iter()
                .flat_map(|p| {
                    res.iter().map(move |&i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Compare each `e(i)` with the specialization of the lifted seminormal
    /// idempotent. Returns the sequences where the two routes disagree.
    pub fn crosscheck_idempotents(&self) -> Result<Vec<Vec<Residue>>, KlrError> {
        let lift = Lift::new(self.n(), self.config.q().clone(), self.config.quiver().clone())?;
        let mut bad = Vec::new();
        for i in self.all_sequences() {
            if lift.e_idem_specialized(&i)? != self.e_idem(&i) {
                bad.push(i);
            }
        }
        Ok(bad)
    }

    // ---- y_r ----------------------------------------------------------------

    fn check_r(&self, r: usize, max: usize) -> Result<(), KlrError> {
        if r == 0 || r > max {
            return Err(KlrError::Index { index: r, max });
        }
        Ok(())
    }

    /// `y_r e(i)`: `(1 - q^{-i_r} L_r) e(i)`, or `(L_r - i_r) e(i)` when `q = 1`.
    fn y_on(&self, r: usize, i: &[Residue], e: &Element<F>) -> Element<F> {
        let le = self.hecke.lmul_l(r, e);
        let c = self.config.q_res(i[r - 1]);
        if self.config.degenerate() {
            le - e.scale(&c)
        } else {
            e.clone() - le.scale(&c.inv().expect("q_i is invertible"))
        }
    }

    fn build_y(&mut self) -> Result<(), KlrError> {
        let n = self.n();
        for r in 1..=n {
            let mut y = Element::zero();
            for (i, e) in &self.idem {
                y = y + self.y_on(r, i, e);
            }
            self.y.push(y);
        }
        let cap = self.hecke.dim() + 1;
        for r in 1..=n {
            let y = &self.y[r - 1];
            let mut m = 0;
            let mut p = self.hecke.one();
            while !p.is_zero() {
                if m > cap {
                    return Err(KlrError::NotNilpotent(r));
                }
                p = self.hecke.mul(&p, y);
                m += 1;
            }
            self.nilpotency.push(m);
        }
        Ok(())
    }

    /// The generator `y_r`, `1 <= r <= n`.
    pub fn y(&self, r: usize) -> Result<&Element<F>, KlrError> {
        self.check_r(r, self.n())?;
        Ok(&self.y[r - 1])
    }

    /// The least `m` with `y_r^m = 0`.
    pub fn nilpotency_index(&self, r: usize) -> Result<usize, KlrError> {
        self.check_r(r, self.n())?;
        Ok(self.nilpotency[r - 1])
    }

    // ---- local series -------------------------------------------------------

    pub(super) fn adjacency(&self, a: Residue, b: Residue) -> Adjacency {
        let q = self.config.quiver();
        if q.same(a, b) {
            return Adjacency::Equal;
        }
        match (q.same(b, a + 1), q.same(b, a - 1)) {
            (true, true) => Adjacency::Double,
            (true, false) => Adjacency::Up,
            (false, true) => Adjacency::Down,
            (false, false) => Adjacency::Unlinked,
        }
    }

    /// The inverse of `c0 e + N` inside `e H e`, where `N` is nilpotent and
    /// commutes with `e`, by the geometric series.
    fn local_inverse(&self, a: &Element<F>, c0: &F, e: &Element<F>) -> Result<Element<F>, KlrError> {
        let h = &self.hecke;
        let ci = c0.inv().ok_or_else(|| KlrError::Consistency("zero constant term".into()))?;
        let nil = (a.clone() - e.scale(c0)).scale(&-ci.clone());
        let mut term = e.scale(&ci);
        let mut acc = term.clone();
        let cap = h.dim() + 1;
        for _ in 0..cap {
            term = h.mul(&term, &nil);
            if term.is_zero() {
                return Ok(acc);
            }
            acc = acc + term.clone();
        }
        Err(KlrError::Consistency("series does not terminate".into()))
    }

    fn require_nondegenerate(&self, what: &'static str) -> Result<(), KlrError> {
        if self.config.degenerate() {
            return Err(KlrError::Degenerate(what));
        }
        Ok(())
    }

    /// `P_r(i) e(i)`, evaluated from the expansion
    /// `(1-q)/(1-c) {1 + sum_k c (y_{r+1}-y_r)(y_{r+1}-c y_r)^{k-1}/(1-c)^k}`
    /// with `c = q^{i_r - i_{r+1}}`, truncated where the terms vanish.
    pub fn p_series(&self, r: usize, i: &[Residue]) -> Result<Element<F>, KlrError> {
        self.require_nondegenerate("P_r(i)")?;
        self.check_r(r, self.n().saturating_sub(1))?;
        let e = self.e_idem(i);
        if e.is_zero() || self.adjacency(i[r - 1], i[r]) == Adjacency::Equal {
            return Ok(e);
        }
        let h = &self.hecke;
        let one = self.scalar(1);
        let q = self.config.q().clone();
        let c = self.config.q_res(i[r - 1]) * self.config.q_res(i[r]).inv().expect("unit");
        let denom_inv = (one.clone() - c.clone())
            .inv()
            .ok_or_else(|| KlrError::ZeroConstant { r, i: i.to_vec() })?;
        let yr = self.y_on(r, i, &e);
        let ys = self.y_on(r + 1, i, &e);
        let d = ys.clone() - yr.clone();
        let b = (ys - yr.scale(&c)).scale(&denom_inv);
        let mut acc = e.clone();
        let mut term = d.scale(&(c * denom_inv.clone()));
        let cap = h.dim() + 1;
        let mut steps = 0;
        while !term.is_zero() {
            acc = acc + term.clone();
            term = h.mul(&term, &b);
            steps += 1;
            if steps > cap {
                return Err(KlrError::Consistency("P series does not terminate".into()));
            }
        }
        Ok(acc.scale(&((one - q) * denom_inv)))
    }

    /// `Q_r(i)^{-1} e(i)` together with its constant term.
    ///
    /// With `X = L_r e(i)` and `Y = L_{r+1} e(i)`:
    /// `Q = q^{-i_r}(X - qY)` when `i_r = i_{r+1}`,
    /// `(X - qY)/(X - Y)` when the vertices are not joined,
    /// `(X - qY)/(X - Y)^2` when `i_{r+1} = i_r + 1`,
    /// `q^{i_r}` when `i_{r+1} = i_r - 1`,
    /// and `q^{i_r}/(X - Y)` when `e = 2` and they are joined.
    fn q_inverse_local(&self, r: usize, i: &[Residue]) -> Result<(Element<F>, F), KlrError> {
        let h = &self.hecke;
        let e = self.e_idem(i);
        let q = self.config.q().clone();
        let (a, b) = (i[r - 1], i[r]);
        let (qa, qb) = (self.config.q_res(a), self.config.q_res(b));
        let qa_inv = qa.inv().expect("unit");
        let x = h.lmul_l(r, &e);
        let y = h.lmul_l(r + 1, &e);
        let x_minus_y = x.clone() - y.clone();
        let x_minus_qy = x - y.scale(&q);
        let c_xy = qa.clone() - qb.clone();
        let c_xqy = qa.clone() - q.clone() * qb;
        let zero_const = || KlrError::ZeroConstant { r, i: i.to_vec() };
        let out = match self.adjacency(a, b) {
            Adjacency::Equal => {
                let c0 = qa_inv.clone() * c_xqy;
                if c0.is_zero() {
                    return Err(zero_const());
                }
                let inv = self.local_inverse(&x_minus_qy.scale(&qa_inv), &c0, &e)?;
                (inv, c0.inv().expect("non-zero"))
            }
            Adjacency::Unlinked => {
                let inv = self.local_inverse(&x_minus_qy, &c_xqy, &e)?;
                let c0 = c_xy.clone() * c_xqy.inv().ok_or_else(zero_const)?;
                (h.mul(&x_minus_y, &inv), c0)
            }
            Adjacency::Up => {
                let inv = self.local_inverse(&x_minus_qy, &c_xqy, &e)?;
                let sq = h.mul(&x_minus_y, &x_minus_y);
                let c0 = c_xy.clone() * c_xy * c_xqy.inv().ok_or_else(zero_const)?;
                (h.mul(&sq, &inv), c0)
            }
            Adjacency::Down => (e.scale(&qa_inv), qa_inv),
            Adjacency::Double => (x_minus_y.scale(&qa_inv), qa_inv * c_xy),
        };
        if out.1.is_zero() {
            return Err(zero_const());
        }
        Ok(out)
    }

    /// `Q_r(i) e(i)`.
    pub fn q_series(&self, r: usize, i: &[Residue]) -> Result<Element<F>, KlrError> {
        self.require_nondegenerate("Q_r(i)")?;
        self.check_r(r, self.n().saturating_sub(1))?;
        let e = self.e_idem(i);
        if e.is_zero() {
            return Ok(e);
        }
        let (inv, c0) = self.q_inverse_local(r, i)?;
        self.local_inverse(&inv, &c0, &e)
    }

    /// `Q_r(i)^{-1} e(i)`.
    pub fn q_inverse_series(&self, r: usize, i: &[Residue]) -> Result<Element<F>, KlrError> {
        self.require_nondegenerate("Q_r(i)")?;
        self.check_r(r, self.n().saturating_sub(1))?;
        if self.e_idem(i).is_zero() {
            return Ok(Element::zero());
        }
        Ok(self.q_inverse_local(r, i)?.0)
    }

    fn build_psi(&mut self) -> Result<(), KlrError> {
        let n = self.n();
        let keys: Vec<Vec<Residue>> = self.idem.keys().cloned().collect();
        for r in 1..n {
            let mut psi = Element::zero();
            for i in &keys {
                let qi = self.q_inverse_series(r, i)?;
                let p = self.p_series(r, i)?;
                psi = psi + self.hecke.lmul_t(r, &qi) + self.hecke.mul(&p, &qi);
            }
            self.psi.push(psi);
        }
        Ok(())
    }

    /// The generator `psi_r`, `1 <= r < n`; requires `q != 1`.
    pub fn psi(&self, r: usize) -> Result<&Element<F>, KlrError> {
        self.require_nondegenerate("psi_r")?;
        self.check_r(r, self.n().saturating_sub(1))?;
        Ok(&self.psi[r - 1])
    }

    /// `psi_{i_k} ... psi_{i_1} x` for the word `(i_1, ..., i_k)`.
    pub fn lmul_psi_word(&self, word: &[usize], x: &Element<F>) -> Result<Element<F>, KlrError> {
        let mut acc = x.clone();
        for &i in word {
            acc = self.hecke.mul(self.psi(i)?, &acc);
        }
        Ok(acc)
    }

    /// `x psi_{j_1} ... psi_{j_m}` for the word `(j_1, ..., j_m)`.
    pub fn rmul_psi_word(&self, x: &Element<F>, word: &[usize]) -> Result<Element<F>, KlrError> {
        let mut acc = x.clone();
        for &j in word {
            acc = self.hecke.mul(&acc, self.psi(j)?);
        }
        Ok(acc)
    }
}
