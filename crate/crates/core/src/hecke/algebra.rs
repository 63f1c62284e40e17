//! Parameters and the normal-form multiplication engine.

use std::collections::HashMap;
use std::sync::RwLock;

use serde_json::{json, Value};

use super::element::Element;
use super::HeckeError;
use crate::combin::{Perm, SymGroup};
use crate::scalars::Scalar;

/// Parameters `(n, q, Q_1, ..., Q_l)` of `H_n(q, Q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeParams<F> {
    n: usize,
    q: F,
    big_q: Vec<F>,
}

impl<F: Scalar> HeckeParams<F> {
    /// Validate and store the parameters; `q` must be invertible and at
    /// least one cyclotomic parameter is required.
    pub fn new(n: usize, q: F, big_q: Vec<F>) -> Result<Self, HeckeError> {
        if q.is_zero() {
            return Err(HeckeError::ZeroQ);
        }
        if big_q.is_empty() {
            return Err(HeckeError::NoParameters);
        }
        Ok(HeckeParams { n, q, big_q })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    /// The cyclotomic parameters `Q_1, ..., Q_l`.
    pub fn parameters(&self) -> &[F] {
        &self.big_q
    }

    /// The level `l`.
    pub fn level(&self) -> usize {
        self.big_q.len()
    }

    /// Is `q = 1`?
    pub fn degenerate(&self) -> bool {
        self.q.is_one()
    }

    /// The same parameters for a different rank.
    pub fn with_rank(&self, n: usize) -> Self {
        HeckeParams {
            n,
            q: self.q.clone(),
            big_q: self.big_q.clone(),
        }
    }
}

/// The cyclotomic Hecke algebra `H_n(q, Q)` with its multiplication engine.
///
/// Products are computed by left multiplication by generators. `T_i` is
/// moved past a monomial in the Jucys-Murphy elements by a twisted divided
/// difference, which never raises an exponent to `l`. A power `L_k^l` is
/// rewritten with `L_k = q^{-1} T_{k-1} L_{k-1} T_{k-1} + delta T_{k-1}`
/// down to `L_1`, where the cyclotomic relation applies. These rewrites are
/// memoized per basis label.
#[derive(Debug)]
pub struct Hecke<F: Scalar> {
    params: HeckeParams<F>,
    group: SymGroup,
    nfact: usize,
    /// `pows[k - 1] = l^(n - k)`, the place value of `a_k`.
    pows: Vec<usize>,
    /// `L_1^l = sum_j cyclo[j] L_1^j`.
    cyclo: Vec<F>,
    qinv: F,
    delta: F,
    overflow: RwLock<HashMap<(usize, usize), Element<F>>>,
}

impl<F: Scalar> Hecke<F> {
    pub fn new(params: HeckeParams<F>) -> Self {
        let n = params.n;
        let l = params.level();
        let group = SymGroup::new(n);
        let nfact = group.order();
        let pows = (1..=n).map(|k| l.pow((n - k) as u32)).collect();
        let one = params.q.one_like();
        // prod (X - Q_s) = X^l + c_{l-1} X^{l-1} + ... + c_0
        let mut poly = vec![one.clone()];
        for qs in &params.big_q {
            let mut next = vec![one.zero_like(); poly.len() + 1];
            for (j, c) in poly.iter().enumerate() {
                next[j + 1] = next[j + 1].clone() + c.clone();
                next[j] = next[j].clone() - c.clone() * qs.clone();
            }
            poly = next;
        }
        let cyclo = poly[..l].iter().map(|c| -c.clone()).collect();
        let qinv = params.q.inv().expect("q is invertible");
        let delta = if params.degenerate() {
            one.clone()
        } else {
            one.zero_like()
        };
        Hecke {
            params,
            group,
            nfact,
            pows,
            cyclo,
            qinv,
            delta,
            overflow: RwLock::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &HeckeParams<F> {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn level(&self) -> usize {
        self.params.level()
    }

    pub fn group(&self) -> &SymGroup {
        &self.group
    }

    /// The dimension `l^n n!`.
    pub fn dim(&self) -> usize {
        self.l_count() * self.nfact
    }

    fn l_count(&self) -> usize {
        self.level().pow(self.n() as u32)
    }

    fn one_scalar(&self) -> F {
        self.params.q.one_like()
    }

    /// A scalar from an integer.
    pub fn scalar(&self, v: i64) -> F {
        self.params.q.from_i64_like(v)
    }

    // ---- labels -------------------------------------------------------

    /// The label of `L^a T_w`, with `w` given by its group index.
    pub fn label(&self, a: &[usize], w: usize) -> usize {
        let ai: usize = a.iter().zip(&self.pows).map(|(x, p)| x * p).sum();
        ai * self.nfact + w
    }

    /// Decode a label into `(a, w)`.
    pub fn decode(&self, label: usize) -> (Vec<usize>, usize) {
        let l = self.level();
        let ai = label / self.nfact;
        let a = self.pows.iter().map(|p| (ai / p) % l).collect();
        (a, label % self.nfact)
    }

    fn exponent(&self, label: usize, k: usize) -> usize {
        (label / self.nfact / self.pows[k - 1]) % self.level()
    }

    fn with_exponent(&self, label: usize, k: usize, v: usize) -> usize {
        let old = self.exponent(label, k);
        label + v * self.pows[k - 1] * self.nfact - old * self.pows[k - 1] * self.nfact
    }

    fn with_w(&self, label: usize, w: usize) -> usize {
        label - label % self.nfact + w
    }

    // ---- generators ---------------------------------------------------

    pub fn one(&self) -> Element<F> {
        Element::single(0, self.one_scalar())
    }

    /// A scalar multiple of the identity.
    pub fn constant(&self, c: F) -> Element<F> {
        Element::single(0, c)
    }

    fn check_t(&self, i: usize) -> Result<(), HeckeError> {
        if i == 0 || i >= self.n() {
            return Err(HeckeError::Index {
                name: "T",
                index: i,
                max: self.n().saturating_sub(1),
            });
        }
        Ok(())
    }

    fn check_l(&self, k: usize) -> Result<(), HeckeError> {
        if k == 0 || k > self.n() {
            return Err(HeckeError::Index {
                name: "L",
                index: k,
                max: self.n(),
            });
        }
        Ok(())
    }

    /// The generator `T_i`, `1 <= i < n`.
    pub fn t(&self, i: usize) -> Result<Element<F>, HeckeError> {
        self.check_t(i)?;
        let w = self.group.left_simple(i, self.group.identity());
        Ok(Element::single(w, self.one_scalar()))
    }

    /// The Jucys-Murphy element `L_k`, `1 <= k <= n`.
    pub fn l(&self, k: usize) -> Result<Element<F>, HeckeError> {
        self.check_l(k)?;
        Ok(self.lmul_l(k, &self.one()))
    }

    /// `T_w` for a permutation of the right degree.
    pub fn t_perm(&self, w: &Perm) -> Result<Element<F>, HeckeError> {
        if w.degree() != self.n() {
            return Err(HeckeError::Degree {
                got: w.degree(),
                want: self.n(),
            });
        }
        Ok(Element::single(self.group.index_of(w), self.one_scalar()))
    }

    /// `T_{i_1} ... T_{i_k}` for an arbitrary word.
    pub fn t_word(&self, word: &[usize]) -> Result<Element<F>, HeckeError> {
        let mut x = self.one();
        for &i in word.iter().rev() {
            self.check_t(i)?;
            x = self.lmul_t(i, &x);
        }
        Ok(x)
    }

    // ---- left multiplication by generators ----------------------------

    /// `T_i * x`.
    pub fn lmul_t(&self, i: usize, x: &Element<F>) -> Element<F> {
        let q = self.params.q.clone();
        let qm1 = q.clone() - self.one_scalar();
        let mut out = Element::zero();
        for (label, c) in x.iter() {
            let w = label % self.nfact;
            let ai = self.exponent(label, i);
            let bi = self.exponent(label, i + 1);
            // (s_i L^a) T_i T_w
            let swapped = self.with_exponent(self.with_exponent(label, i, bi), i + 1, ai);
            let sw = self.group.left_simple(i, w);
            if self.group.length(sw) > self.group.length(w) {
                out.add_term(self.with_w(swapped, sw), c.clone());
            } else {
                out.add_term(swapped, c.clone() * qm1.clone());
                out.add_term(self.with_w(swapped, sw), c.clone() * q.clone());
            }
            // ((q - 1) Y + delta) (X^a Y^b - X^b Y^a) / (Y - X) T_w
            if ai != bi {
                let (lo, m, sign) = if ai > bi {
                    (bi, ai - bi, -c.clone())
                } else {
                    (ai, bi - ai, c.clone())
                };
                for j in 0..m {
                    let (u, v) = (lo + j, lo + m - 1 - j);
                    let base = self.with_exponent(label, i, u);
                    if !qm1.is_zero() {
                        out.add_term(self.with_exponent(base, i + 1, v + 1), sign.clone() * qm1.clone());
                    }
                    if !self.delta.is_zero() {
                        out.add_term(self.with_exponent(base, i + 1, v), sign.clone() * self.delta.clone());
                    }
                }
            }
        }
        out
    }

    /// `L_k * x`.
    pub fn lmul_l(&self, k: usize, x: &Element<F>) -> Element<F> {
        let l = self.level();
        let mut out = Element::zero();
        for (label, c) in x.iter() {
            let a = self.exponent(label, k);
            if a + 1 < l {
                out.add_term(label + self.pows[k - 1] * self.nfact, c.clone());
            } else {
                out.add_scaled(&self.overflow(k, label), c);
            }
        }
        out
    }

    /// `L_k * b_label` for a label whose `a_k` equals `l - 1`.
    fn overflow(&self, k: usize, label: usize) -> Element<F> {
        if let Some(e) = self.overflow.read().expect("cache lock").get(&(k, label)) {
            return e.clone();
        }
        let result = if k == 1 {
            let mut out = Element::zero();
            for (j, c) in self.cyclo.iter().enumerate() {
                out.add_term(self.with_exponent(label, 1, j), c.clone());
            }
            out
        } else {
            let y = self.lmul_t(k - 1, &Element::single(label, self.one_scalar()));
            let z = self.lmul_t(k - 1, &self.lmul_l(k - 1, &y));
            let mut r = z.scale(&self.qinv);
            r.add_scaled(&y, &self.delta);
            r
        };
        self.overflow
            .write()
            .expect("cache lock")
            .entry((k, label))
            .or_insert_with(|| result.clone());
        result
    }

    /// `x * T_i`.
    pub fn rmul_t(&self, x: &Element<F>, i: usize) -> Element<F> {
        let q = self.params.q.clone();
        let qm1 = q.clone() - self.one_scalar();
        let mut out = Element::zero();
        for (label, c) in x.iter() {
            let w = label % self.nfact;
            let ws = self.group.right_simple(i, w);
            if self.group.length(ws) > self.group.length(w) {
                out.add_term(self.with_w(label, ws), c.clone());
            } else {
                out.add_term(label, c.clone() * qm1.clone());
                out.add_term(self.with_w(label, ws), c.clone() * q.clone());
            }
        }
        out
    }

    /// `x * T_{i_1} ... T_{i_k}`.
    pub fn rmul_word(&self, x: &Element<F>, word: &[usize]) -> Element<F> {
        word.iter().fold(x.clone(), |acc, &i| self.rmul_t(&acc, i))
    }

    /// `T_{i_1} ... T_{i_k} * x`.
    pub fn lmul_word(&self, word: &[usize], x: &Element<F>) -> Element<F> {
        word.iter().rev().fold(x.clone(), |acc, &i| self.lmul_t(i, &acc))
    }

    // ---- products -----------------------------------------------------

    /// The product `a * b` in normal form.
    pub fn mul(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        if a.is_zero() || b.is_zero() {
            return Element::zero();
        }
        let mut by_w: HashMap<usize, Vec<(usize, &F)>> = HashMap::new();
        for (label, c) in a.iter() {
            by_w.entry(label % self.nfact).or_default().push((label, c));
        }
        let mut tw_cache: HashMap<usize, Element<F>> = HashMap::new();
        let mut out = Element::zero();
        let mut ws: Vec<usize> = by_w.keys().copied().collect();
        ws.sort_unstable();
        for w in ws {
            let tb = self.tw_times(w, b, &mut tw_cache);
            for &(label, c) in &by_w[&w] {
                let mut x = tb.clone();
                for k in 1..=self.n() {
                    for _ in 0..self.exponent(label, k) {
                        x = self.lmul_l(k, &x);
                    }
                }
                out.add_scaled(&x, c);
            }
        }
        out
    }

    fn tw_times(&self, w: usize, b: &Element<F>, cache: &mut HashMap<usize, Element<F>>) -> Element<F> {
        if w == self.group.identity() {
            return b.clone();
        }
        if let Some(x) = cache.get(&w) {
            return x.clone();
        }
        let i = self.group.word(w)[0];
        let rest = self.group.left_simple(i, w);
        let inner = self.tw_times(rest, b, cache);
        let x = self.lmul_t(i, &inner);
        cache.insert(w, x.clone());
        x
    }

    /// The product of a list of elements, left to right.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a Element<F>>) -> Element<F> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, x: &Element<F>, k: usize) -> Element<F> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// The image of `x` under the natural embedding into `target`, an
    /// algebra of larger rank with the same parameters.
    pub fn embed(&self, x: &Element<F>, target: &Hecke<F>) -> Result<Element<F>, HeckeError> {
        if target.n() < self.n() || target.params.parameters() != self.params.parameters() {
            return Err(HeckeError::Degree {
                got: target.n(),
                want: self.n(),
            });
        }
        let m = target.n();
        let mut out = Element::zero();
        for (label, c) in x.iter() {
            let (mut a, w) = self.decode(label);
            a.resize(m, 0);
            let mut images: Vec<u8> = self.group.perm(w).images().to_vec();
            images.extend((self.n() + 1..=m).map(|k| k as u8));
            let p = Perm::from_images(images).expect("extended permutation");
            out.add_term(target.label(&a, target.group.index_of(&p)), c.clone());
        }
        Ok(out)
    }

    // ---- anti-automorphism and trace -----------------------------------

    /// The anti-automorphism fixing every `T_i` and `L_k`, so that
    /// `(L^a T_w)* = T_{w^{-1}} L^a`.
    pub fn murphy_star(&self, x: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (label, c) in x.iter() {
            let w = label % self.nfact;
            let base = Element::single(self.with_w(label, self.group.identity()), c.clone());
            // T_{w^{-1}} = T_{i_k} ... T_{i_1} for w = s_{i_1} ... s_{i_k}
            let mut y = base;
            for &i in self.group.word(w) {
                y = self.lmul_t(i, &y);
            }
            out = out + y;
        }
        out
    }

    /// The trace form: the coefficient of `1` when `q != 1`, and of
    /// `L_1^{l-1} ... L_n^{l-1}` when `q = 1`.
    pub fn tau(&self, x: &Element<F>) -> F {
        let label = if self.params.degenerate() {
            (self.l_count() - 1) * self.nfact
        } else {
            0
        };
        x.coeff(label).cloned().unwrap_or_else(|| self.params.q.zero_like())
    }

    // ---- serialization --------------------------------------------------

    /// JSON list of `{"a": [...], "w": [...], "c": "..."}` in label order.
    pub fn to_json(&self, x: &Element<F>) -> Value {
        Value::Array(
            x.iter()
                .map(|(label, c)| {
                    let (a, w) = self.decode(label);
                    json!({
                        "a": a,
                        "w": self.group.perm(w).images(),
                        "c": c.to_string(),
                    })
                })
                .collect(),
        )
    }

    /// Parse the JSON produced by [`Hecke::to_json`].
    pub fn from_json(
        &self,
        v: &Value,
        parse: impl Fn(&str) -> Option<F>,
    ) -> Result<Element<F>, HeckeError> {
        let bad = |m: &str| HeckeError::Json(m.to_string());
        let mut out = Element::zero();
        for t in v.as_array().ok_or_else(|| bad("expected a list of terms"))? {
            let a: Vec<usize> = t["a"]
                .as_array()
                .ok_or_else(|| bad("missing \"a\""))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| bad("bad exponent"))?;
            if a.len() != self.n() || a.iter().any(|&x| x >= self.level()) {
                return Err(bad("exponent vector out of range"));
            }
            let w: Vec<u8> = t["w"]
                .as_array()
                .ok_or_else(|| bad("missing \"w\""))?
                .iter()
                .map(|x| x.as_u64().and_then(|x| u8::try_from(x).ok()))
                .collect::<Option<_>>()
                .ok_or_else(|| bad("bad permutation"))?;
            let w = Perm::from_images(w)
                .filter(|p| p.degree() == self.n())
                .ok_or_else(|| bad("not a permutation of the right degree"))?;
            let c = t["c"]
                .as_str()
                .and_then(&parse)
                .ok_or_else(|| bad("bad coefficient"))?;
            out.add_term(self.label(&a, self.group.index_of(&w)), c);
        }
        Ok(out)
    }
}
