//! Homogeneous elements built from the KLR generators.

use super::generators::Klr;
use super::KlrError;
use crate::combin::{positive_exponents, Multipartition, Residue, StandardTableau};
use crate::hecke::Element;
use crate::scalars::Scalar;

/// The outcome of solving `z_n^{eps,s} = C e(i^{eps,s}) y_n^{eps,s}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZnsCheck<F> {
    /// The constant `C`, when `z` is a multiple of the right-hand side.
    pub constant: Option<F>,
    /// The residue sequence `i^{eps,s}`.
    pub residues: Vec<Residue>,
    /// The exponents `d_1, ..., d_n`.
    pub exponents: Vec<usize>,
    /// `2 (d_1 + ... + d_n)`.
    pub degree: i64,
}

impl<F: Scalar> ZnsCheck<F> {
    /// `C` exists and is non-zero.
    pub fn passed(&self) -> bool {
        self.constant.as_ref().is_some_and(|c| !c.is_zero())
    }
}

/// The scalar `c` with `a = c b`, if there is one (`b != 0`).
pub(crate) fn ratio<F: Scalar>(a: &Element<F>, b: &Element<F>) -> Option<F> {
    let (label, c) = b.iter().next()?;
    let r = a.coeff(label).cloned().unwrap_or_else(|| c.zero_like()) * c.inv()?;
    (b.scale(&r) == *a).then_some(r)
}

impl<F: Scalar> Klr<F> {
    fn check_shape(&self, lam: &Multipartition) -> Result<(), KlrError> {
        if lam.size() != self.n() || lam.level() != self.config().quiver().level() {
            return Err(KlrError::Shape(format!(
                "{} is not a multipartition of {} with {} components",
                lam,
                self.n(),
                self.config().quiver().level()
            )));
        }
        Ok(())
    }

    /// `prod_k y_k^{a_k}` applied on the left of `x`.
    pub fn y_monomial(&self, exps: &[usize], x: &Element<F>) -> Result<Element<F>, KlrError> {
        let mut acc = x.clone();
        for (k, &a) in exps.iter().enumerate() {
            for _ in 0..a {
                acc = self.hecke().mul(self.y(k + 1)?, &acc);
            }
        }
        Ok(acc)
    }

    /// `y_lambda = prod_k y_k^{|Add^Lambda_{t^lambda}(k)|}`.
    pub fn y_lambda(&self, lam: &Multipartition) -> Result<Element<F>, KlrError> {
        self.check_shape(lam)?;
        let t = StandardTableau::initial(lam);
        self.y_monomial(&positive_exponents(&t, self.config().quiver()), &self.hecke().one())
    }

    /// `e_lambda = e(i^lambda)`.
    pub fn e_lambda(&self, lam: &Multipartition) -> Result<Element<F>, KlrError> {
        self.check_shape(lam)?;
        Ok(self.e_idem(&StandardTableau::initial(lam).residues(self.config().quiver())))
    }

    /// `e'_lambda = e(i')` for `i = i^lambda`, the residues of the conjugate
    /// of the initial tableau.
    pub fn e_prime_lambda(&self, lam: &Multipartition) -> Result<Element<F>, KlrError> {
        self.check_shape(lam)?;
        let t = StandardTableau::initial(lam).conjugate();
        Ok(self.e_idem(&t.residues(self.config().quiver())))
    }

    /// `e_lambda y_lambda`; fails if it is zero.
    pub fn e_lambda_y_lambda(&self, lam: &Multipartition) -> Result<Element<F>, KlrError> {
        let x = self.hecke().mul(&self.e_lambda(lam)?, &self.y_lambda(lam)?);
        if x.is_zero() {
            return Err(KlrError::Theorem(format!("e_lambda y_lambda = 0 for {}", lam)));
        }
        Ok(x)
    }

    fn check_pair(&self, s: &StandardTableau, t: &StandardTableau) -> Result<(), KlrError> {
        if s.shape() != t.shape() {
            return Err(KlrError::Shape(format!(
                "tableaux of shapes {} and {}",
                s.shape(),
                t.shape()
            )));
        }
        self.check_shape(s.shape())
    }

    /// `psi_st = psi_{i_k} ... psi_{i_1} e_lambda y_lambda psi_{j_1} ... psi_{j_m}`
    /// for the canonical reduced words `d(s) = s_{i_1} ... s_{i_k}` and
    /// `d(t) = s_{j_1} ... s_{j_m}`.
    pub fn psi_st(&self, s: &StandardTableau, t: &StandardTableau) -> Result<Element<F>, KlrError> {
        self.psi_st_words(s, t, &s.d_word(), &t.d_word())
    }

    /// `psi_st` built from the given reduced words for `d(s)` and `d(t)`.
    pub fn psi_st_words(
        &self,
        s: &StandardTableau,
        t: &StandardTableau,
        ws: &[usize],
        wt: &[usize],
    ) -> Result<Element<F>, KlrError> {
        self.check_pair(s, t)?;
        let lam = s.shape();
        let core = self.hecke().mul(&self.e_lambda(lam)?, &self.y_lambda(lam)?);
        let x = self.rmul_psi_word(&core, wt)?;
        self.lmul_psi_word(ws, &x)
    }

    /// `psi'_st = psi_{i_k} ... psi_{i_1} e'_lambda y_lambda psi_{j_1} ... psi_{j_m}`.
    pub fn psi_prime_st(
        &self,
        s: &StandardTableau,
        t: &StandardTableau,
    ) -> Result<Element<F>, KlrError> {
        self.check_pair(s, t)?;
        let lam = s.shape();
        let core = self.hecke().mul(&self.e_prime_lambda(lam)?, &self.y_lambda(lam)?);
        let x = self.rmul_psi_word(&core, &t.d_word())?;
        self.lmul_psi_word(&s.d_word(), &x)
    }

    // ---- one dimensional ideals --------------------------------------------

    /// `i^{eps,s}_k = s + eps (k - 1)`.
    pub fn zns_residues(&self, s: Residue, plus: bool) -> Vec<Residue> {
        let q = self.config().quiver();
        (0..self.n() as i64)
            .map(|k| q.reduce(if plus { s + k } else { s - k }))
            .collect()
    }

    /// `d_k = (Lambda, alpha_{i_k}) - delta_{s, i_k} + delta_{e | k}`.
    pub fn zns_exponents(&self, s: Residue, plus: bool) -> Vec<usize> {
        let q = self.config().quiver();
        let e = q.e() as usize;
        self.zns_residues(s, plus)
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                let base = q.lambda_pairing(i) - i64::from(q.same(i, s));
                let extra = usize::from(e > 0 && (k + 1) % e == 0);
                base.max(0) as usize + extra
            })
            .collect()
    }

    /// `z_n^{eps,s} = u_{n,s} x_(n)` (or `u_{n,s} x'_(n)` for `eps = -`),
    /// `u_{n,s} = prod_i ((L_1 - q^i) ... (L_n - q^i))^{(Lambda,alpha_i) - delta_is}`.
    pub fn z_ns(&self, s: Residue, plus: bool) -> Result<Element<F>, KlrError> {
        if self.config().degenerate() {
            return Err(KlrError::Degenerate("z_n^{eps,s}"));
        }
        let quiver = self.config().quiver();
        if quiver.lambda_pairing(s) == 0 {
            return Err(KlrError::Shape(format!("(Lambda, alpha_{}) = 0", s)));
        }
        let h = self.hecke();
        let g = h.group();
        let mq_inv = (-self.config().q().clone()).inv().expect("unit");
        let mut x = Element::zero();
        for w in 0..g.order() {
            let c = if plus {
                h.scalar(1)
            } else {
                mq_inv.pow_i64(g.length(w) as i64).expect("unit")
            };
            x.add_term(w, c);
        }
        let mut vertices: Vec<Residue> = quiver.multicharge().iter().map(|&k| quiver.reduce(k)).collect();
        vertices.push(quiver.reduce(s));
        vertices.sort_unstable();
        vertices.dedup();
        for i in vertices {
            let m = quiver.lambda_pairing(i) - i64::from(quiver.same(i, s));
            let c = self.config().q_res(i);
            for _ in 0..m {
                for k in 1..=self.n() {
                    x = h.lmul_l(k, &x) - x.scale(&c);
                }
            }
        }
        Ok(x)
    }

    /// Solve `z_n^{eps,s} = C e(i^{eps,s}) y_n^{eps,s}` for `C`.
    pub fn verify_zns(&self, s: Residue, plus: bool) -> Result<ZnsCheck<F>, KlrError> {
        let z = self.z_ns(s, plus)?;
        let residues = self.zns_residues(s, plus);
        let exponents = self.zns_exponents(s, plus);
        let rhs = self.y_monomial(&exponents, &self.e_idem(&residues))?;
        let degree = 2 * exponents.iter().sum::<usize>() as i64;
        Ok(ZnsCheck {
            constant: ratio(&z, &rhs),
            residues,
            exponents,
            degree,
        })
    }

    /// `T_i z = z T_i = q z` (or `-z`) and `L_k z = z L_k = q^{s + eps(k-1)} z`.
    pub fn is_one_dimensional_ideal(&self, z: &Element<F>, s: Residue, plus: bool) -> Result<bool, KlrError> {
        let h = self.hecke();
        let q = self.config().q().clone();
        let tc = if plus { q.clone() } else { -q.one_like() };
        for i in 1..self.n() {
            let t = h.t(i)?;
            let want = z.scale(&tc);
            if h.mul(&t, z) != want || h.mul(z, &t) != want {
                return Ok(false);
            }
        }
        for k in 1..=self.n() {
            let l = h.l(k)?;
            let e = s + if plus { k as i64 - 1 } else { 1 - k as i64 };
            let want = z.scale(&self.config().q_res(e));
            if h.mul(&l, z) != want || h.mul(z, &l) != want {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `t_lambda = (t^{lambda'})'`, the last tableau in dominance.
    pub fn t_lower(lam: &Multipartition) -> StandardTableau {
        StandardTableau::initial(&lam.conjugate()).conjugate()
    }

    /// `z_lambda = m_lambda T_{w_lambda} n_{lambda'}` with `w_lambda = d(t_lambda)`.
    pub fn z_lambda(&self, lam: &Multipartition) -> Result<Element<F>, KlrError> {
        self.check_shape(lam)?;
        let h = self.hecke();
        let m = h.m_lambda(lam)?;
        let x = h.rmul_word(&m, &Self::t_lower(lam).d_word());
        Ok(h.mul(&x, &h.n_lambda(&lam.conjugate())?))
    }

    /// `e'_{lambda'} = e(i^{t_lambda})`.
    pub fn e_prime_conjugate(&self, lam: &Multipartition) -> Result<Element<F>, KlrError> {
        self.check_shape(lam)?;
        Ok(self.e_idem(&Self::t_lower(lam).residues(self.config().quiver())))
    }
}
