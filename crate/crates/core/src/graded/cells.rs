//! Graded Specht modules, their Gram forms, and characters of the graded
//! simple modules.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::basis::{Graded, Pair};
use super::GradedError;
use crate::combin::{degree, standard_tableaux, Multipartition, Residue, StandardTableau};
use crate::hecke::Element;
use crate::linalg::Matrix;
use crate::scalars::{Laurent, Scalar};

/// A homogeneous generator of the KLR presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    Idempotent(Vec<Residue>),
    Y(usize),
    Psi(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Idempotent(i) => {
                let s: Vec<String> = i.iter().map(|r| r.to_string()).collect();
                write!(f, "e({})", s.join(","))
            }
            Generator::Y(r) => write!(f, "y_{}", r),
            Generator::Psi(r) => write!(f, "psi_{}", r),
        }
    }
}

/// A graded character: `(i, d) -> dim M_{i,d}`, where `M_{i,d}` is the
/// degree `d` part of `M e(i)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    dims: BTreeMap<(Vec<Residue>, i64), i64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: &[Residue], d: i64, c: i64) {
        let key = (i.to_vec(), d);
        let v = self.dims.entry(key.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.dims.remove(&key);
        }
    }

    pub fn get(&self, i: &[Residue], d: i64) -> i64 {
        self.dims.get(&(i.to_vec(), d)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Vec<Residue>, i64), &i64)> + '_ {
        self.dims.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// `M<k>` with `M<k>_d = M_{d - k}`.
    pub fn shift(&self, k: i64) -> Self {
        Character {
            dims: self.dims.iter().map(|((i, d), &c)| ((i.clone(), d + k), c)).collect(),
        }
    }

    /// Degrees occurring in the character, as `(min, max)`.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let min = self.dims.keys().map(|k| k.1).min()?;
        let max = self.dims.keys().map(|k| k.1).max()?;
        Some((min, max))
    }

    /// `dim M_{i,d} = dim M_{i,-d}` for all `(i, d)`.
    pub fn is_bar_symmetric(&self) -> bool {
        self.dims.iter().all(|((i, d), &c)| self.get(i, -d) == c)
    }

    /// `sum dim M_{i,d} t^d`.
    pub fn graded_dim(&self) -> Laurent {
        let mut out = Laurent::zero();
        for ((_, d), &c) in &self.dims {
            out.add_term(*d, c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let v: Vec<Value> = self
            .dims
            .iter()
            .map(|((i, d), c)| json!({"i": i, "d": d, "dim": c}))
            .collect();
        Value::Array(v)
    }
}

/// The right action of the generators on the graded Specht module
/// `S^lambda` in its basis `psi_t = psi_{t^lambda t} + H^{>lambda}`.
///
/// Row `t` of an action matrix holds the coordinates of `psi_t g`.
#[derive(Debug, Clone)]
pub struct CellModule<F> {
    pub shape: Multipartition,
    pub basis: Vec<StandardTableau>,
    pub degrees: Vec<i64>,
    pub actions: Vec<(Generator, Matrix<F>)>,
}

impl<F: Scalar> CellModule<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn action(&self, g: &Generator) -> Option<&Matrix<F>> {
        self.actions.iter().find(|(h, _)| h == g).map(|(_, m)| m)
    }
}

/// The bilinear form on a graded Specht module, `<psi_s, psi_t>`.
#[derive(Debug, Clone)]
pub struct GramMatrix<F> {
    pub shape: Multipartition,
    pub basis: Vec<StandardTableau>,
    pub residues: Vec<Vec<Residue>>,
    pub degrees: Vec<i64>,
    pub matrix: Matrix<F>,
}

impl<F: Scalar> GramMatrix<F> {
    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    /// Every non-zero entry pairs basis vectors with equal residue
    /// sequences and degrees summing to zero.
    pub fn respects_grading(&self) -> bool {
        let n = self.basis.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.matrix.get(a, b).is_zero()
                    || (self.residues[a] == self.residues[b] && self.degrees[a] + self.degrees[b] == 0)
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        if self.basis.is_empty() {
            0
        } else {
            self.matrix.rank()
        }
    }

    /// The rank of the block pairing weight `i` degree `d` against weight
    /// `i` degree `-d`; this is `dim D_{i,d}`.
    pub fn block_rank(&self, i: &[Residue], d: i64) -> usize {
        let rows: Vec<usize> = (0..self.basis.len())
            .filter(|&a| self.residues[a] == i && self.degrees[a] == d)
            .collect();
        let cols: Vec<usize> = (0..self.basis.len())
            .filter(|&b| self.residues[b] == i && self.degrees[b] == -d)
            .collect();
        if rows.is_empty() || cols.is_empty() {
            return 0;
        }
        let w = self.matrix.get(0, 0).zero_like();
        let sub = Matrix::from_rows(
            rows.iter()
                .map(|&a| cols.iter().map(|&b| self.matrix.get(a, b).clone()).collect())
                .collect(),
            &w,
        );
        sub.rank()
    }

    /// The graded character of `D = S / rad S`.
    pub fn simple_character(&self) -> Character {
        let mut keys: Vec<(Vec<Residue>, i64)> = self
            .residues
            .iter()
            .cloned()
            .zip(self.degrees.iter().copied())
            .collect();
        keys.sort();
        keys.dedup();
        let mut ch = Character::new();
        for (i, d) in keys {
            let r = self.block_rank(&i, d);
            if r > 0 {
                ch.add(&i, d, r as i64);
            }
        }
        ch
    }
}

impl<F: Scalar> Graded<F> {
    fn check_shape(&self, lam: &Multipartition) -> Result<(), GradedError> {
        if lam.size() != self.n() || lam.level() != self.quiver().level() {
            return Err(GradedError::Shape(format!(
                "{} is not a multipartition of {} with {} components",
                lam,
                self.n(),
                self.quiver().level()
            )));
        }
        Ok(())
    }

    /// The homogeneous generators with their elements: the non-zero
    /// `e(i)`, then `y_1..y_n`, then `psi_1..psi_{n-1}`.
    pub fn generators(&self) -> Result<Vec<(Generator, Element<F>)>, GradedError> {
        let klr = self.klr();
        let mut out: Vec<(Generator, Element<F>)> = klr
            .support()
            .map(|i| (Generator::Idempotent(i.clone()), klr.e_idem(i)))
            .collect();
        for r in 1..=self.n() {
            out.push((Generator::Y(r), klr.y(r)?.clone()));
        }
        for r in 1..self.n() {
            out.push((Generator::Psi(r), klr.psi(r)?.clone()));
        }
        Ok(out)
    }

    /// Split `psi` coordinates of an element of `psi_{s *} H` modulo
    /// `H^{>lambda}`: the coefficients of `psi_{s v}`, in the order of
    /// `tabs`. Anything outside that span and the more dominant shapes is a
    /// theorem violation.
    fn cell_row(
        &self,
        coords: &[F],
        s: &StandardTableau,
        tabs: &[StandardTableau],
        what: &str,
    ) -> Result<Vec<F>, GradedError> {
        let lam = s.shape();
        let w = self.witness();
        let mut row = vec![w.zero_like(); tabs.len()];
        for (j, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.pair(j);
            let mu = p.shape();
            if mu == lam && &p.s == s {
                let k = tabs.iter().position(|t| t == &p.t).expect("same shape");
                row[k] = c.clone();
            } else if !(mu != lam && mu.dominates(lam)) {
                return Err(GradedError::Theorem(format!(
                    "{} has a term psi_{} outside psi_(s *) H + H^(>{})",
                    what, p, lam
                )));
            }
        }
        Ok(row)
    }

    /// The graded Specht module `S^lambda` with the action of every
    /// generator. The coefficients are computed for `psi_st g` and every
    /// `s`, and must not depend on `s`.
    pub fn cell_module(&self, lam: &Multipartition) -> Result<CellModule<F>, GradedError> {
        self.check_shape(lam)?;
        let tabs = standard_tableaux(lam);
        let f = tabs.len();
        let w = self.witness();
        let mut actions = Vec::new();
        for (g, x) in self.generators()? {
            let jobs: Vec<(usize, usize)> = (0..f).flat_map(|a| (0..f).map(move |b| (a, b))).collect();
            let rows: Vec<Vec<F>> = jobs
                .par_iter()
                .map(|&(a, b)| {
                    let j = self.index_of(&Pair::new(tabs[a].clone(), tabs[b].clone())).expect("pair");
                    let prod = self.hecke().mul(self.psi(j), &x);
                    let what = format!("psi_({}, {}) {}", tabs[a], tabs[b], g);
                    self.cell_row(&self.psi_coordinates(&prod), &tabs[a], &tabs, &what)
                })
                .collect::<Result<_, _>>()?;
            let first = Matrix::from_rows(rows[..f].to_vec(), &w);
            for a in 1..f {
                if rows[a * f..(a + 1) * f] != rows[..f] {
                    return Err(GradedError::Theorem(format!(
                        "action of {} on S^{} depends on the first index {}",
                        g, lam, tabs[a]
                    )));
                }
            }
            actions.push((g, first));
        }
        let degrees = tabs.iter().map(|t| degree(t, self.quiver())).collect();
        Ok(CellModule {
            shape: lam.clone(),
            basis: tabs,
            degrees,
            actions,
        })
    }

    /// The Gram matrix of `S^lambda`: `<psi_s, psi_t>` is the coefficient
    /// of `psi_{t^lambda t^lambda}` in `psi_{t^lambda s} psi_{t t^lambda}`.
    pub fn gram(&self, lam: &Multipartition) -> Result<GramMatrix<F>, GradedError> {
        self.check_shape(lam)?;
        let tabs = standard_tableaux(lam);
        let f = tabs.len();
        let top = tabs[0].clone();
        let jobs: Vec<(usize, usize)> = (0..f).flat_map(|a| (0..f).map(move |b| (a, b))).collect();
        let entries: Vec<F> = jobs
            .par_iter()
            .map(|&(a, b)| {
                let x = self.psi(self.index_of(&Pair::new(top.clone(), tabs[a].clone())).expect("pair"));
                let y = self.psi(self.index_of(&Pair::new(tabs[b].clone(), top.clone())).expect("pair"));
                let prod = self.hecke().mul(x, y);
                let what = format!("psi_(t, {}) psi_({}, t)", tabs[a], tabs[b]);
                let row = self.cell_row(&self.psi_coordinates(&prod), &top, &tabs, &what)?;
                if row.iter().skip(1).any(|c| !c.is_zero()) {
                    return Err(GradedError::Theorem(format!("{} is not a multiple of psi_(t,t)", what)));
                }
                Ok(row[0].clone())
            })
            .collect::<Result<_, _>>()?;
        let w = self.witness();
        let matrix = Matrix::from_rows(entries.chunks(f).map(<[F]>::to_vec).collect(), &w);
        let q = self.quiver();
        Ok(GramMatrix {
            shape: lam.clone(),
            residues: tabs.iter().map(|t| t.residues(q)).collect(),
            degrees: tabs.iter().map(|t| degree(t, q)).collect(),
            basis: tabs,
            matrix,
        })
    }

    /// The graded character of `D^mu`.
    pub fn simple_character(&self, mu: &Multipartition) -> Result<Character, GradedError> {
        Ok(self.gram(mu)?.simple_character())
    }

    /// The graded character of `S^lambda`: one `(res t, deg t)` per
    /// standard tableau.
    pub fn specht_character(&self, lam: &Multipartition) -> Result<Character, GradedError> {
        self.check_shape(lam)?;
        let q = self.quiver();
        let mut ch = Character::new();
        for t in standard_tableaux(lam) {
            ch.add(&t.residues(q), degree(&t, q), 1);
        }
        Ok(ch)
    }
}
