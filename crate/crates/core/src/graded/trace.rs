//! The homogeneous trace form `tau_beta` of a block, the pairing between
//! the `psi` and `psi'` bases, and the duality of graded Specht modules.

use rayon::prelude::*;

use super::basis::{Block, Graded, Pair};
use super::GradedError;
use crate::combin::{standard_tableaux, Multipartition, StandardTableau};
use crate::hecke::Element;
use crate::linalg::Matrix;
use crate::scalars::Scalar;

/// A square matrix indexed by the pairs of a block.
///
/// For the `psi`/`psi'` pairing and for the Murphy traces, column `b`
/// stands for the conjugate of pair `b`, so the expected non-zero pattern
/// is "row `a`, column `b` with `b = a` or pair `b` dominating pair `a`".
#[derive(Debug, Clone)]
pub struct PairMatrix<F> {
    pub pairs: Vec<Pair>,
    pub matrix: Matrix<F>,
}

impl<F: Scalar> PairMatrix<F> {
    /// Positions `(a, b)` with a non-zero entry where pair `b` neither
    /// equals nor dominates pair `a`.
    pub fn triangularity_violations(&self) -> Vec<(usize, usize)> {
        let n = self.pairs.len();
        let mut bad = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && !self.matrix.get(a, b).is_zero() && !self.pairs[b].dominates(&self.pairs[a]) {
                    bad.push((a, b));
                }
            }
        }
        bad
    }

    /// Positions of zero diagonal entries.
    pub fn zero_diagonal(&self) -> Vec<usize> {
        (0..self.pairs.len()).filter(|&a| self.matrix.get(a, a).is_zero()).collect()
    }

    /// Triangular with non-zero diagonal.
    pub fn is_triangular(&self) -> bool {
        self.triangularity_violations().is_empty() && self.zero_diagonal().is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn rank(&self) -> usize {
        if self.pairs.is_empty() {
            0
        } else {
            self.matrix.rank()
        }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.pairs.len()
    }

    /// The diagonal is constant on pairs of the same shape.
    pub fn diagonal_constant_per_shape(&self) -> bool {
        self.weighted_diagonal_constant_per_shape(|_| self.matrix.get(0, 0).one_like())
    }

    /// The diagonal entries, each multiplied by `weight(pair)`, are constant
    /// on pairs of the same shape.
    pub fn weighted_diagonal_constant_per_shape(&self, weight: impl Fn(&Pair) -> F) -> bool {
        let d: Vec<F> = (0..self.pairs.len())
            .map(|a| self.matrix.get(a, a).clone() * weight(&self.pairs[a]))
            .collect();
        (0..d.len()).all(|a| (0..a).all(|b| self.pairs[a].shape() != self.pairs[b].shape() || d[a] == d[b]))
    }
}

/// The pairing between `S^lambda<deg t^lambda>` and `S_{lambda'}<deg t_{lambda'}>`.
#[derive(Debug, Clone)]
pub struct DualityReport<F> {
    pub shape: Multipartition,
    pub defect: i64,
    /// Row `s`, column `t`: `tau_beta(psi_{t^lambda s} psi'_{t t_{lambda'}})`,
    /// with `s` in `Std(lambda)` and `t` in `Std(lambda')`.
    pub matrix: Matrix<F>,
    pub rows: Vec<StandardTableau>,
    pub cols: Vec<StandardTableau>,
    pub rank: usize,
    /// Every non-zero entry has `deg(psi) + deg(psi') = 2 defect`.
    pub homogeneous: bool,
    /// Entry `(s, t)` is zero unless `t' >= s`, and non-zero for `t' = s`.
    pub triangular: bool,
}

impl<F> DualityReport<F> {
    pub fn passed(&self) -> bool {
        self.rank == self.rows.len() && self.rows.len() == self.cols.len() && self.homogeneous && self.triangular
    }
}

impl<F: Scalar> Graded<F> {
    /// `tau_beta(h)`: the trace of the component of `h` of degree
    /// `2 defect beta`. Fails unless `h` lies in the block.
    pub fn tau_beta(&self, h: &Element<F>, block: &Block) -> Result<F, GradedError> {
        if !self.in_block(h, block) {
            return Err(GradedError::NotInBlock(block.label()));
        }
        Ok(self.tau_beta_unchecked(h, block.defect))
    }

    fn tau_beta_unchecked(&self, h: &Element<F>, defect: i64) -> F {
        let taus = self.tau_of_psi();
        let mut acc = self.witness().zero_like();
        for (j, c) in self.psi_coordinates(h).iter().enumerate() {
            if !c.is_zero() && self.pair_degree(j) == 2 * defect {
                acc = acc + c.clone() * taus[j].clone();
            }
        }
        acc
    }

    fn pair_matrix(
        &self,
        block: &Block,
        entry: impl Fn(&Pair, &Pair) -> Result<F, GradedError> + Sync,
    ) -> Result<PairMatrix<F>, GradedError> {
        let pairs: Vec<Pair> = self.block_pairs(block).into_iter().map(|j| self.pair(j).clone()).collect();
        let n = pairs.len();
        let jobs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let vals: Vec<F> = jobs
            .par_iter()
            .map(|&(a, b)| entry(&pairs[a], &pairs[b]))
            .collect::<Result<_, _>>()?;
        let matrix = Matrix::from_rows(vals.chunks(n.max(1)).map(<[F]>::to_vec).collect(), &self.witness());
        Ok(PairMatrix { pairs, matrix })
    }

    /// `<psi_st, psi'_uv>_beta = tau_beta(psi_st psi'_vu)` with row `(s, t)`
    /// and column `(u, v)` the conjugate of a pair of the block.
    pub fn pairing_matrix(&self, block: &Block) -> Result<PairMatrix<F>, GradedError> {
        self.pair_matrix(block, |st, col| {
            let uv = col.conjugate();
            let x = self.klr().psi_prime_st(&uv.t, &uv.s)?;
            let prod = self.hecke().mul(self.psi(self.index_of(st).expect("pair")), &x);
            Ok(self.tau_beta_unchecked(&prod, block.defect))
        })
    }

    /// `tau_beta(a b*)` over the `psi` basis of the block. Each product is
    /// also checked to be homogeneous of degree `deg a + deg b`.
    pub fn symmetric_gram(&self, block: &Block) -> Result<PairMatrix<F>, GradedError> {
        self.pair_matrix(block, |a, b| {
            let ja = self.index_of(a).expect("pair");
            let jb = self.index_of(&b.swap()).expect("pair");
            let prod = self.hecke().mul(self.psi(ja), self.psi(jb));
            if !prod.is_zero() {
                let want = self.pair_degree(ja) + self.pair_degree(jb);
                if self.degree_of(&prod)? != Some(want) {
                    return Err(GradedError::Theorem(format!(
                        "psi_{} psi_{} is not homogeneous of degree {}",
                        a,
                        b.swap(),
                        want
                    )));
                }
            }
            Ok(self.tau_beta_unchecked(&prod, block.defect))
        })
    }

    /// `tau(m_ab n_dc)` with row `(a, b)` and column `(c, d)` the conjugate
    /// of a pair of the block.
    pub fn murphy_trace_matrix(&self, block: &Block) -> Result<PairMatrix<F>, GradedError> {
        let h = self.hecke();
        self.pair_matrix(block, |ab, col| {
            let cd = col.conjugate();
            let prod = h.mul(&h.m_st(&ab.s, &ab.t)?, &h.n_st(&cd.t, &cd.s)?);
            Ok(h.tau(&prod))
        })
    }

    /// Pairs `(s, t)` of the block for which `m_st n_{t's'}` is not a
    /// non-zero homogeneous element of degree `2 defect beta`.
    pub fn murphy_dual_degree_failures(&self, block: &Block) -> Result<Vec<Pair>, GradedError> {
        let h = self.hecke();
        let mut bad = Vec::new();
        for j in self.block_pairs(block) {
            let p = self.pair(j);
            let prod = h.mul(&h.m_st(&p.s, &p.t)?, &h.n_st(&p.t.conjugate(), &p.s.conjugate())?);
            if prod.is_zero() || self.degree_of(&prod)? != Some(2 * block.defect) {
                bad.push(p.clone());
            }
        }
        Ok(bad)
    }

    /// The pairing `<psi_{t^lambda s}, psi'_{t_{lambda'} t}>_beta` between
    /// `S^lambda` and `S_{lambda'}`, where `t_{lambda'} = (t^lambda)'`.
    pub fn specht_duality_check(&self, lam: &Multipartition) -> Result<DualityReport<F>, GradedError> {
        let block = self.block_of_shape(lam)?;
        let rows = standard_tableaux(lam);
        let conj = lam.conjugate();
        let cols = standard_tableaux(&conj);
        let top = rows[0].clone();
        let low = top.conjugate();
        let mut vals = Vec::new();
        let mut homogeneous = true;
        let w = self.witness();
        for s in &rows {
            let x = self.psi(self.index_of(&Pair::new(top.clone(), s.clone())).expect("pair"));
            let dx = self.pair_degree(self.index_of(&Pair::new(top.clone(), s.clone())).expect("pair"));
            let mut row = Vec::new();
            for t in &cols {
                let y = self.klr().psi_prime_st(t, &low)?;
                let v = self.tau_beta_unchecked(&self.hecke().mul(x, &y), block.defect);
                if !v.is_zero() && !y.is_zero() && self.degree_of(&y)?.map(|d| d + dx) != Some(2 * block.defect) {
                    homogeneous = false;
                }
                row.push(v);
            }
            vals.push(row);
        }
        let matrix = Matrix::from_rows(vals, &w);
        let mut triangular = true;
        for (a, s) in rows.iter().enumerate() {
            for (b, t) in cols.iter().enumerate() {
                let tc = t.conjugate();
                let zero = matrix.get(a, b).is_zero();
                if (&tc == s && zero) || (!zero && !tc.dominates(s)) {
                    triangular = false;
                }
            }
        }
        let rank = if rows.is_empty() { 0 } else { matrix.rank() };
        Ok(DualityReport {
            shape: lam.clone(),
            defect: block.defect,
            matrix,
            rows,
            cols,
            rank,
            homogeneous,
            triangular,
        })
    }
}

