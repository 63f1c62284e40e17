//! Quiver, Cartan matrix and dominant weight data.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value};
use thiserror::Error;

/// A vertex of the quiver: an element of `Z/eZ` stored in `0..e`, or an
/// integer when `e = 0`.
pub type Residue = i64;

/// Errors in quiver data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("quantum characteristic must be 0 or at least 2, got {0}")]
    BadE(u64),
    #[error("the multicharge must have at least one entry")]
    EmptyMulticharge,
}

/// The quiver `Gamma_e` together with a multicharge `kappa` defining the
/// dominant weight `Lambda = Lambda_{kappa_1} + ... + Lambda_{kappa_l}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuiverData {
    e: u64,
    kappa: Vec<i64>,
}

impl QuiverData {
    pub fn new(e: u64, kappa: Vec<i64>) -> Result<Self, QuiverError> {
        if e == 1 {
            return Err(QuiverError::BadE(e));
        }
        if kappa.is_empty() {
            return Err(QuiverError::EmptyMulticharge);
        }
        Ok(QuiverData { e, kappa })
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn multicharge(&self) -> &[i64] {
        &self.kappa
    }

    /// The level `l`.
    pub fn level(&self) -> usize {
        self.kappa.len()
    }

    /// Canonical representative of the vertex `i`.
    pub fn reduce(&self, i: i64) -> Residue {
        if self.e == 0 {
            i
        } else {
            i.rem_euclid(self.e as i64)
        }
    }

    /// Equality of vertices, the single residue comparison used everywhere.
    pub fn same(&self, i: Residue, j: Residue) -> bool {
        self.reduce(i) == self.reduce(j)
    }

    /// The residue `c - r + kappa_l` of the node `(r, c, l)`.
    pub fn residue(&self, r: usize, c: usize, l: usize) -> Residue {
        self.reduce(c as i64 - r as i64 + self.kappa[l - 1])
    }

    /// Cartan entry `a_{ij}`.
    pub fn cartan(&self, i: Residue, j: Residue) -> i64 {
        if self.same(i, j) {
            return 2;
        }
        let up = self.same(i, j + 1);
        let down = self.same(i, j - 1);
        match (up, down) {
            (false, false) => 0,
            _ if self.e == 2 => -2,
            _ => -1,
        }
    }

    /// `(Lambda, alpha_i) = #{s : kappa_s = i mod e}`.
    pub fn lambda_pairing(&self, i: Residue) -> i64 {
        self.kappa.iter().filter(|&&k| self.same(k, i)).count() as i64
    }

    /// The vertices `0..e`, or `None` when `e = 0` and `I = Z` is infinite.
    pub fn vertices(&self) -> Option<Vec<Residue>> {
        (self.e > 0).then(|| (0..self.e as i64).collect())
    }

    /// `(beta, beta)` for `beta = sum c_i alpha_i`.
    pub fn root_norm(&self, beta: &RootVector) -> i64 {
        let mut s = 0;
        for (&i, &a) in &beta.coeffs {
            for (&j, &b) in &beta.coeffs {
                s += self.cartan(i, j) * (a * b) as i64;
            }
        }
        s
    }

    /// `(Lambda, beta)`.
    pub fn lambda_beta(&self, beta: &RootVector) -> i64 {
        beta.coeffs
            .iter()
            .map(|(&i, &c)| self.lambda_pairing(i) * c as i64)
            .sum()
    }

    /// `defect beta = (Lambda, beta) - (beta, beta) / 2`.
    pub fn defect(&self, beta: &RootVector) -> i64 {
        let norm = self.root_norm(beta);
        debug_assert!(norm % 2 == 0, "the Cartan form is even");
        self.lambda_beta(beta) - norm / 2
    }
}

/// An element `beta = sum c_i alpha_i` of the positive root lattice.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coeffs: BTreeMap<Residue, usize>,
}

impl RootVector {
    /// `alpha_{i_1} + ... + alpha_{i_n}`.
    pub fn of_residues(q: &QuiverData, i: &[Residue]) -> Self {
        let mut coeffs = BTreeMap::new();
        for &r in i {
            *coeffs.entry(q.reduce(r)).or_insert(0) += 1;
        }
        RootVector { coeffs }
    }

    pub fn coeff(&self, i: Residue) -> usize {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.coeffs.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Residue, usize)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    /// JSON object `{"i": c_i}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (i, c) in &self.coeffs {
            m.insert(i.to_string(), Value::from(*c));
        }
        Value::Object(m)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, c)| {
                if *c == 1 {
                    format!("a{}", i)
                } else {
                    format!("{}a{}", c, i)
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}
