//! Evaluation of every defining relation of the cyclotomic KLR algebra on
//! the constructed generators, plus the inverse map and the embedding
//! `H_n -> H_{n+1}`.

use serde_json::{json, Value};

use super::generators::{Adjacency, Klr};
use super::KlrError;
use crate::combin::Residue;
use crate::hecke::Element;
use crate::scalars::Scalar;

/// The outcome of one family of identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    /// Number of instances evaluated.
    pub instances: usize,
    /// The first failing instance, if any.
    pub witness: Option<String>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// A list of relation families with their outcomes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> + '_ {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.checks
                .iter()
                .map(|c| {
                    json!({
                        "relation": c.name,
                        "instances": c.instances,
                        "pass": c.passed(),
                        "witness": c.witness,
                    })
                })
                .collect(),
        )
    }
}

/// Accumulates instances of one relation family.
struct Family {
    check: RelationCheck,
}

impl Family {
    fn new(name: &str) -> Self {
        Family {
            check: RelationCheck {
                name: name.to_string(),
                instances: 0,
                witness: None,
            },
        }
    }

    fn record<F: Scalar>(&mut self, lhs: &Element<F>, rhs: &Element<F>, what: impl FnOnce() -> String) {
        self.check.instances += 1;
        if lhs != rhs && self.check.witness.is_none() {
            self.check.witness = Some(what());
        }
    }

    fn done(self, report: &mut RelationReport) {
        report.checks.push(self.check);
    }
}

impl<F: Scalar> Klr<F> {
    fn swap(i: &[Residue], r: usize) -> Vec<Residue> {
        let mut j = i.to_vec();
        j.swap(r - 1, r);
        j
    }

    /// Evaluate every relation of the KLR presentation. Relations involving
    /// `psi` are skipped when `q = 1`.
    pub fn check_relations(&self) -> Result<RelationReport, KlrError> {
        let h = self.hecke();
        let n = self.n();
        let quiver = self.config().quiver().clone();
        let e2 = quiver.e() == 2;
        let seqs = self.all_sequences();
        let support: Vec<Vec<Residue>> = self.support().cloned().collect();
        let mut report = RelationReport::default();
        let zero = Element::zero();

        let mut fam = Family::new("y_1^(Lambda,alpha_i1) e(i) = 0");
        for i in &support {
            let e = self.e_idem(i);
            let k = quiver.lambda_pairing(i[0]) as usize;
            let mut x = e;
            for _ in 0..k {
                x = h.mul(self.y(1)?, &x);
            }
            fam.record(&x, &zero, || format!("i = {:?}", i));
        }
        fam.done(&mut report);

        let mut fam = Family::new("e(i) e(j) = delta_ij e(i)");
        for i in &support {
            for j in &support {
                let prod = h.mul(&self.e_idem(i), &self.e_idem(j));
                let want = if i == j { self.e_idem(i) } else { Element::zero() };
                fam.record(&prod, &want, || format!("i = {:?}, j = {:?}", i, j));
            }
        }
        fam.done(&mut report);

        let mut fam = Family::new("sum e(i) = 1");
        let mut sum = Element::zero();
        for i in &support {
            sum = sum + self.e_idem(i);
        }
        fam.record(&sum, &h.one(), || "sum".into());
        fam.done(&mut report);

        let mut fam = Family::new("y_r e(i) = e(i) y_r");
        for i in &support {
            let e = self.e_idem(i);
            for r in 1..=n {
                let y = self.y(r)?;
                fam.record(&h.mul(y, &e), &h.mul(&e, y), || format!("r = {}, i = {:?}", r, i));
            }
        }
        fam.done(&mut report);

        let mut fam = Family::new("y_r y_s = y_s y_r");
        for r in 1..=n {
            for s in r + 1..=n {
                let (a, b) = (self.y(r)?, self.y(s)?);
                fam.record(&h.mul(a, b), &h.mul(b, a), || format!("r = {}, s = {}", r, s));
            }
        }
        fam.done(&mut report);

        if !self.config().degenerate() {
            self.psi_relations(&mut report, &seqs, e2)?;
        }
        self.inverse_relations(&mut report)?;
        Ok(report)
    }

    fn psi_relations(
        &self,
        report: &mut RelationReport,
        seqs: &[Vec<Residue>],
        e2: bool,
    ) -> Result<(), KlrError> {
        let h = self.hecke();
        let n = self.n();
        let support: Vec<Vec<Residue>> = self.support().cloned().collect();
        let zero = Element::zero();

        let mut fam = Family::new("psi_r e(i) = e(s_r i) psi_r");
        for i in seqs {
            let e = self.e_idem(i);
            for r in 1..n {
                let psi = self.psi(r)?;
                let lhs = h.mul(psi, &e);
                let rhs = h.mul(&self.e_idem(&Self::swap(i, r)), psi);
                fam.record(&lhs, &rhs, || format!("r = {}, i = {:?}", r, i));
            }
        }
        fam.done(report);

        let mut fam = Family::new("psi_r y_s = y_s psi_r (s != r, r+1)");
        for r in 1..n {
            for s in (1..=n).filter(|&s| s != r && s != r + 1) {
                let (p, y) = (self.psi(r)?, self.y(s)?);
                fam.record(&h.mul(p, y), &h.mul(y, p), || format!("r = {}, s = {}", r, s));
            }
        }
        fam.done(report);

        let mut fam = Family::new("psi_r psi_s = psi_s psi_r (|r-s| > 1)");
        for r in 1..n {
            for s in r + 2..n {
                let (a, b) = (self.psi(r)?, self.psi(s)?);
                fam.record(&h.mul(a, b), &h.mul(b, a), || format!("r = {}, s = {}", r, s));
            }
        }
        fam.done(report);

        let mut f_left = Family::new("psi_r y_{r+1} e(i) = (y_r psi_r + delta) e(i)");
        let mut f_right = Family::new("y_{r+1} psi_r e(i) = (psi_r y_r + delta) e(i)");
        let mut f_sq = Family::new("psi_r^2 e(i)");
        for i in &support {
            let e = self.e_idem(i);
            for r in 1..n {
                let psi = self.psi(r)?;
                let (yr, ys) = (self.y(r)?, self.y(r + 1)?);
                let adj = self.adjacency(i[r - 1], i[r]);
                let delta = if adj == Adjacency::Equal { e.clone() } else { Element::zero() };
                let pe = h.mul(psi, &e);
                let lhs = h.mul(psi, &h.mul(ys, &e));
                let rhs = h.mul(yr, &pe) + delta.clone();
                f_left.record(&lhs, &rhs, || format!("r = {}, i = {:?}", r, i));
                let lhs = h.mul(ys, &pe);
                let rhs = h.mul(psi, &h.mul(yr, &e)) + delta;
                f_right.record(&lhs, &rhs, || format!("r = {}, i = {:?}", r, i));

                let lhs = h.mul(psi, &pe);
                let diff = ys.clone() - yr.clone();
                let rhs = match adj {
                    Adjacency::Equal => zero.clone(),
                    Adjacency::Unlinked => e.clone(),
                    Adjacency::Up => h.mul(&diff, &e),
                    Adjacency::Down => h.mul(&(-diff), &e),
                    Adjacency::Double => h.mul(&h.mul(&diff, &(-diff.clone())), &e),
                };
                f_sq.record(&lhs, &rhs, || format!("r = {}, i = {:?}", r, i));
            }
        }
        f_left.done(report);
        f_right.done(report);
        f_sq.done(report);

        let mut fam = Family::new("psi_r psi_{r+1} psi_r e(i) = (psi_{r+1} psi_r psi_{r+1} + c) e(i)");
        let quiver = self.config().quiver();
        for i in &support {
            let e = self.e_idem(i);
            for r in 1..n.saturating_sub(1) {
                let (a, b) = (self.psi(r)?, self.psi(r + 1)?);
                let lhs = h.product([a, b, a, &e]);
                let mut rhs = h.product([b, a, b, &e]);
                let (ir, is, it) = (i[r - 1], i[r], i[r + 1]);
                if quiver.same(it, ir) {
                    if e2 && quiver.same(ir, is + 1) {
                        let corr = self.y(r)?.clone() - self.y(r + 1)?.scale(&self.scalar_i(2))
                            + self.y(r + 2)?.clone();
                        rhs = rhs + h.mul(&corr, &e);
                    } else if !e2 && quiver.same(ir, is - 1) {
                        rhs = rhs + e.clone();
                    } else if !e2 && quiver.same(ir, is + 1) {
                        rhs = rhs - e.clone();
                    }
                }
                fam.record(&lhs, &rhs, || format!("r = {}, i = {:?}", r, i));
            }
        }
        fam.done(report);
        Ok(())
    }

    fn scalar_i(&self, v: i64) -> F {
        self.hecke().scalar(v)
    }

    /// `L_r = sum_i q^{i_r}(1 - y_r) e(i)` (or `(y_r + i_r) e(i)` when
    /// `q = 1`) and `T_s = sum_i (psi_s Q_s(i) - P_s(i)) e(i)`.
    fn inverse_relations(&self, report: &mut RelationReport) -> Result<(), KlrError> {
        let h = self.hecke();
        let n = self.n();
        let support: Vec<Vec<Residue>> = self.support().cloned().collect();
        let mut fam = Family::new("L_r = sum_i q_{i_r}(1 - y_r) e(i)");
        for r in 1..=n {
            let mut acc = Element::zero();
            for i in &support {
                let e = self.e_idem(i);
                let ye = h.mul(self.y(r)?, &e);
                let c = self.config().q_res(i[r - 1]);
                acc = acc
                    + if self.config().degenerate() {
                        ye + e.scale(&c)
                    } else {
                        (e - ye).scale(&c)
                    };
            }
            fam.record(&acc, &h.l(r)?, || format!("r = {}", r));
        }
        fam.done(report);
        if self.config().degenerate() {
            return Ok(());
        }
        let mut fam = Family::new("T_s = sum_i (psi_s Q_s(i) - P_s(i)) e(i)");
        for s in 1..n {
            let mut acc = Element::zero();
            for i in &support {
                let qe = self.q_series(s, i)?;
                acc = acc + h.mul(self.psi(s)?, &qe) - self.p_series(s, i)?;
            }
            fam.record(&acc, &h.t(s)?, || format!("s = {}", s));
        }
        fam.done(report);
        Ok(())
    }

    /// Check that `e(i) -> sum_j e(i j)`, `y_r -> y_r` and `psi_s -> psi_s`
    /// under the natural embedding into `bigger`, which must have rank
    /// `n + 1` and the same quiver and `q`.
    pub fn check_graded_embedding(&self, bigger: &Klr<F>) -> Result<RelationReport, KlrError> {
        if bigger.n() != self.n() + 1 || bigger.config().quiver() != self.config().quiver() {
            return Err(KlrError::Shape("embedding needs rank n + 1 and the same quiver".into()));
        }
        let (h, g) = (self.hecke(), bigger.hecke());
        let mut report = RelationReport::default();
        let res = bigger.config().residues();
        let mut fam = Family::new("e(i) -> sum_j e(i j)");
        for i in self.all_sequences() {
            let img = h.embed(&self.e_idem(&i), g)?;
            let mut want = Element::zero();
            for &j in &res {
                let mut ij = i.clone();
                ij.push(j);
                want = want + bigger.e_idem(&ij);
            }
            fam.record(&img, &want, || format!("i = {:?}", i));
        }
        fam.done(&mut report);
        let mut fam = Family::new("y_r -> y_r");
        for r in 1..=self.n() {
            fam.record(&h.embed(self.y(r)?, g)?, bigger.y(r)?, || format!("r = {}", r));
        }
        fam.done(&mut report);
        if !self.config().degenerate() {
            let mut fam = Family::new("psi_s -> psi_s");
            for s in 1..self.n() {
                fam.record(&h.embed(self.psi(s)?, g)?, bigger.psi(s)?, || format!("s = {}", s));
            }
            fam.done(&mut report);
        }
        Ok(report)
    }
}
