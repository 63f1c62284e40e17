//! The four cellular bases of the algebra, coordinates against them,
//! degrees, the graded star, and the block decomposition.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::GradedError;
use crate::combin::{
    block_of, blocks, degree, pair_dominates, standard_tableaux, Multipartition, QuiverData,
    RootVector, StandardTableau,
};
use crate::hecke::{Element, Hecke};
use crate::klr::Klr;
use crate::linalg::{BasisSolver, Matrix};
use crate::scalars::{Laurent, Scalar};

/// Default cap on `l^n n!`, the dimension of the algebra.
pub const DEFAULT_MAX_DIM: usize = 5000;

/// A pair `(s, t)` of standard tableaux of the same shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair {
    pub s: StandardTableau,
    pub t: StandardTableau,
}

impl Pair {
    pub fn new(s: StandardTableau, t: StandardTableau) -> Self {
        Pair { s, t }
    }

    pub fn shape(&self) -> &Multipartition {
        self.s.shape()
    }

    /// `(t, s)`.
    pub fn swap(&self) -> Pair {
        Pair::new(self.t.clone(), self.s.clone())
    }

    /// `(s', t')`.
    pub fn conjugate(&self) -> Pair {
        Pair::new(self.s.conjugate(), self.t.conjugate())
    }

    /// Strict pair dominance `self > other`.
    pub fn dominates(&self, other: &Pair) -> bool {
        pair_dominates((&self.s, &self.t), (&other.s, &other.t))
    }

    /// `deg s + deg t`.
    pub fn degree(&self, q: &QuiverData) -> i64 {
        degree(&self.s, q) + degree(&self.t, q)
    }

    pub fn to_json(&self) -> Value {
        json!({"s": self.s.to_json(), "t": self.t.to_json()})
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// All same-shape pairs for the given shapes: shapes in the canonical
/// order, then `s`, then `t` in the canonical tableau order.
pub fn pairs_of(shapes: &[Multipartition]) -> Vec<Pair> {
    let mut shapes = shapes.to_vec();
    shapes.sort_by(|a, b| a.canonical_cmp(b));
    let mut out = Vec::new();
    for lam in &shapes {
        let tabs = standard_tableaux(lam);
        for s in &tabs {
            for t in &tabs {
                out.push(Pair::new(s.clone(), t.clone()));
            }
        }
    }
    out
}

/// The cellular bases indexed by pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `m_st`.
    Murphy,
    /// `n_st`.
    DualMurphy,
    /// `psi_st`.
    Psi,
    /// `psi'_st`.
    PsiPrime,
}

impl Basis {
    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Murphy => "murphy",
            Basis::DualMurphy => "dual-murphy",
            Basis::Psi => "psi",
            Basis::PsiPrime => "psi-prime",
        }
    }
}

/// The non-zero coordinates of an element in one of the bases.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisExpansion<F> {
    pub basis: Basis,
    pub terms: Vec<(Pair, F)>,
}

impl<F: Scalar> BasisExpansion<F> {
    pub fn coeff(&self, p: &Pair) -> Option<&F> {
        self.terms.iter().find(|(q, _)| q == p).map(|(_, c)| c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(p, c)| json!({"s": p.s.to_json(), "t": p.t.to_json(), "c": c.to_string()}))
            .collect();
        json!({"basis": self.basis.name(), "terms": terms})
    }
}

/// A block `H_beta` of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub beta: RootVector,
    /// The multipartitions in the block, in the canonical order.
    pub shapes: Vec<Multipartition>,
    pub defect: i64,
}

impl Block {
    /// Readable label such as `a0 + 2a1`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .beta
            .iter()
            .map(|(i, c)| if c == 1 { format!("a{}", i) } else { format!("{}a{}", c, i) })
            .collect();
        parts.join(" + ")
    }
}

#[derive(Debug)]
struct BasisData<F> {
    elems: Vec<Element<F>>,
    solver: BasisSolver<F>,
}

/// The graded cellular structure of a cyclotomic Hecke algebra with
/// `q != 1`, built on its KLR generators.
#[derive(Debug)]
pub struct Graded<F: Scalar> {
    klr: Klr<F>,
    pairs: Vec<Pair>,
    index: HashMap<Pair, usize>,
    degrees: Vec<i64>,
    bases: [OnceLock<Result<BasisData<F>, GradedError>>; 4],
    tau_psi: OnceLock<Vec<F>>,
}

impl<F: Scalar> Graded<F> {
    /// Build with the default dimension cap.
    pub fn new(klr: Klr<F>) -> Result<Self, GradedError> {
        Self::with_max_dim(klr, DEFAULT_MAX_DIM)
    }

    /// Build the `psi` basis; fails if the algebra is larger than `max_dim`
    /// or `q = 1`, or if the `psi_st` are not a basis.
    pub fn with_max_dim(klr: Klr<F>, max_dim: usize) -> Result<Self, GradedError> {
        if klr.config().degenerate() {
            return Err(GradedError::Degenerate);
        }
        let dim = klr.hecke().dim();
        if dim > max_dim {
            return Err(GradedError::TooLarge { dim, max: max_dim });
        }
        let quiver = klr.config().quiver().clone();
        let pairs = pairs_of(&crate::combin::multipartitions(klr.n(), quiver.level()));
        let index = pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let degrees = pairs.iter().map(|p| p.degree(&quiver)).collect();
        let g = Graded {
            klr,
            pairs,
            index,
            degrees,
            bases: Default::default(),
            tau_psi: OnceLock::new(),
        };
        g.basis_data(Basis::Psi)?;
        Ok(g)
    }

    pub fn klr(&self) -> &Klr<F> {
        &self.klr
    }

    pub fn hecke(&self) -> &Hecke<F> {
        self.klr.hecke()
    }

    pub fn quiver(&self) -> &QuiverData {
        self.klr.config().quiver()
    }

    pub fn n(&self) -> usize {
        self.klr.n()
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    /// All pairs in the canonical order; position `j` indexes every basis.
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn pair(&self, j: usize) -> &Pair {
        &self.pairs[j]
    }

    pub fn index_of(&self, p: &Pair) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `deg psi_st = deg s + deg t` for the pair at position `j`.
    pub fn pair_degree(&self, j: usize) -> i64 {
        self.degrees[j]
    }

    pub(crate) fn witness(&self) -> F {
        self.klr.config().q().clone()
    }

    fn build(&self, b: Basis, p: &Pair) -> Result<Element<F>, GradedError> {
        let h = self.hecke();
        Ok(match b {
            Basis::Murphy => h.m_st(&p.s, &p.t)?,
            Basis::DualMurphy => h.n_st(&p.s, &p.t)?,
            Basis::Psi => self.klr.psi_st(&p.s, &p.t)?,
            Basis::PsiPrime => self.klr.psi_prime_st(&p.s, &p.t)?,
        })
    }

    fn basis_data(&self, b: Basis) -> Result<&BasisData<F>, GradedError> {
        self.bases[b.slot()]
            .get_or_init(|| {
                let elems = self
                    .pairs
                    .par_iter()
                    .map(|p| self.build(b, p))
                    .collect::<Result<Vec<_>, _>>()?;
                let solver = BasisSolver::new(&elems, self.hecke().dim(), &self.witness())
                    .ok_or(GradedError::Singular(b.name()))?;
                Ok(BasisData { elems, solver })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The basis elements, in the order of [`Graded::pairs`].
    pub fn basis(&self, b: Basis) -> Result<&[Element<F>], GradedError> {
        Ok(&self.basis_data(b)?.elems)
    }

    /// `psi_st` for the pair at position `j`.
    pub fn psi(&self, j: usize) -> &Element<F> {
        &self.basis_data(Basis::Psi).expect("built in the constructor").elems[j]
    }

    /// The full coordinate vector of `h` in the basis `b`.
    pub fn coordinates(&self, h: &Element<F>, b: Basis) -> Result<Vec<F>, GradedError> {
        Ok(self.basis_data(b)?.solver.coordinates(h))
    }

    pub(crate) fn psi_coordinates(&self, h: &Element<F>) -> Vec<F> {
        self.basis_data(Basis::Psi)
            .expect("built in the constructor")
            .solver
            .coordinates(h)
    }

    /// The non-zero coordinates of `h` in the basis `b`.
    pub fn expand(&self, h: &Element<F>, b: Basis) -> Result<BasisExpansion<F>, GradedError> {
        let terms = self
            .coordinates(h, b)?
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (self.pairs[j].clone(), c))
            .collect();
        Ok(BasisExpansion { basis: b, terms })
    }

    /// The element with the given `psi` coordinates.
    pub fn from_psi_coordinates(&self, coords: &[F]) -> Element<F> {
        let mut out = Element::zero();
        for (j, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(self.psi(j), c);
            }
        }
        out
    }

    /// The matrix whose column `j` holds the coordinates of the `j`-th
    /// element of `of` in the basis `against`.
    pub fn transition(&self, of: Basis, against: Basis) -> Result<Matrix<F>, GradedError> {
        let elems = self.basis(of)?;
        let cols: Vec<Vec<F>> = elems
            .par_iter()
            .map(|x| self.coordinates(x, against))
            .collect::<Result<_, _>>()?;
        let d = self.dim();
        let mut m = Matrix::zeros(d, d, &self.witness());
        for (j, col) in cols.into_iter().enumerate() {
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Pairs `(i, j)` where `m` breaks unitriangularity with respect to
    /// pair dominance: a zero diagonal entry, or a non-zero entry in row `i`
    /// of column `j` with pair `i` not dominating pair `j`.
    pub fn triangularity_violations(&self, m: &Matrix<F>) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for j in 0..m.cols() {
            for i in 0..m.rows() {
                let c = m.get(i, j);
                if i == j {
                    if c.is_zero() {
                        bad.push((i, j));
                    }
                } else if !c.is_zero() && !self.pairs[i].dominates(&self.pairs[j]) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// The `psi`-to-Murphy transition matrix, checked to be unitriangular
    /// with respect to pair dominance with non-zero diagonal.
    pub fn psi_transition(&self) -> Result<Matrix<F>, GradedError> {
        self.checked_transition(Basis::Psi, Basis::Murphy)
    }

    /// The `psi'`-to-dual-Murphy transition matrix, checked in the same way.
    pub fn psi_prime_transition(&self) -> Result<Matrix<F>, GradedError> {
        self.checked_transition(Basis::PsiPrime, Basis::DualMurphy)
    }

    fn checked_transition(&self, of: Basis, against: Basis) -> Result<Matrix<F>, GradedError> {
        let m = self.transition(of, against)?;
        if let Some(&(i, j)) = self.triangularity_violations(&m).first() {
            return Err(GradedError::Theorem(format!(
                "{} to {} transition not unitriangular at row {} column {}",
                of.name(),
                against.name(),
                self.pairs[i],
                self.pairs[j]
            )));
        }
        Ok(m)
    }

    /// The homogeneous components of `h`, by degree.
    pub fn homogeneous_components(&self, h: &Element<F>) -> BTreeMap<i64, Element<F>> {
        let mut out: BTreeMap<i64, Element<F>> = BTreeMap::new();
        for (j, c) in self.psi_coordinates(h).iter().enumerate() {
            if !c.is_zero() {
                out.entry(self.degrees[j])
                    .or_insert_with(Element::zero)
                    .add_scaled(self.psi(j), c);
            }
        }
        out
    }

    /// The degree of a non-zero `h`, or `None` if it is not homogeneous.
    pub fn degree_of(&self, h: &Element<F>) -> Result<Option<i64>, GradedError> {
        if h.is_zero() {
            return Err(GradedError::Zero);
        }
        let mut deg = None;
        for (j, c) in self.psi_coordinates(h).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.degrees[j]),
                Some(d) if d != self.degrees[j] => return Ok(None),
                Some(_) => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, h: &Element<F>) -> Result<bool, GradedError> {
        Ok(self.degree_of(h)?.is_some())
    }

    /// The graded anti-automorphism `psi_st -> psi_ts`, which fixes
    /// `e(i)`, `y_r` and `psi_r`.
    pub fn star(&self, h: &Element<F>) -> Element<F> {
        let coords = self.psi_coordinates(h);
        let mut out = Element::zero();
        for (j, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let k = self.index[&self.pairs[j].swap()];
                out.add_scaled(self.psi(k), c);
            }
        }
        out
    }

    /// `sum t^{deg s + deg t}` over the `psi` basis.
    pub fn graded_dimension(&self) -> Laurent {
        let mut out = Laurent::zero();
        for &d in &self.degrees {
            out.add_term(d, 1);
        }
        out
    }

    // ---- blocks --------------------------------------------------------

    /// The blocks of the algebra.
    pub fn blocks(&self) -> Vec<Block> {
        let q = self.quiver();
        blocks(self.n(), q)
            .into_iter()
            .map(|(beta, shapes)| Block {
                defect: q.defect(&beta),
                beta,
                shapes,
            })
            .collect()
    }

    /// The block containing `lam`.
    pub fn block_of_shape(&self, lam: &Multipartition) -> Result<Block, GradedError> {
        self.blocks()
            .into_iter()
            .find(|b| b.shapes.contains(lam))
            .ok_or_else(|| GradedError::Shape(format!("{} is not a shape of this algebra", lam)))
    }

    /// `e_beta = sum e(i)` over the residue sequences of content `beta`.
    pub fn block_idempotent(&self, block: &Block) -> Element<F> {
        let mut out = Element::zero();
        let q = self.quiver();
        for i in self.klr.support() {
            if block_of(i, q) == block.beta {
                out = out + self.klr.e_idem(i);
            }
        }
        out
    }

    /// Positions of the pairs whose shape lies in the block.
    pub fn block_pairs(&self, block: &Block) -> Vec<usize> {
        (0..self.dim())
            .filter(|&j| block.shapes.contains(self.pairs[j].shape()))
            .collect()
    }

    /// Whether `h = e_beta h e_beta`.
    pub fn in_block(&self, h: &Element<F>, block: &Block) -> bool {
        let e = self.block_idempotent(block);
        self.hecke().product([&e, h, &e]) == *h
    }

    /// Pairs whose `psi_st` is not fixed by `e_beta (-) e_beta` for its own
    /// block. Empty exactly when the `psi_st` of each block span `H_beta`.
    pub fn block_restriction_failures(&self) -> Vec<Pair> {
        let mut bad = Vec::new();
        for block in self.blocks() {
            for j in self.block_pairs(&block) {
                if !self.in_block(self.psi(j), &block) {
                    bad.push(self.pairs[j].clone());
                }
            }
        }
        bad
    }

    pub(crate) fn tau_of_psi(&self) -> &[F] {
        self.tau_psi
            .get_or_init(|| (0..self.dim()).map(|j| self.hecke().tau(self.psi(j))).collect())
    }
}
