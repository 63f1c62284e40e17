//! The data `(Gamma_e, Lambda, q)` fixing a cyclotomic KLR algebra inside a
//! cyclotomic Hecke algebra.

use super::KlrError;
use crate::combin::{QuiverData, Residue};
use crate::hecke::HeckeParams;
use crate::scalars::{quantum_characteristic, Scalar};

/// Which of the three possible field and parameter situations occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KlrCase {
    /// `q = 1` and `e = p`, the degenerate algebra.
    Degenerate,
    /// `e = 0` and `q` is not a root of unity.
    Generic,
    /// `q` is a primitive `e`-th root of unity.
    RootOfUnity,
}

/// A quiver with multicharge together with `q`, giving the Hecke algebra
/// with parameters `Q = (q_{kappa_1}, ..., q_{kappa_l})`.
#[derive(Debug, Clone, PartialEq)]
pub struct KlrConfig<F: Scalar> {
    quiver: QuiverData,
    case: KlrCase,
    params: HeckeParams<F>,
}

impl<F: Scalar> KlrConfig<F> {
    /// Fails unless the quantum characteristic of `q` is the `e` of the
    /// quiver.
    pub fn new(n: usize, q: F, quiver: QuiverData) -> Result<Self, KlrError> {
        let got = quantum_characteristic(&q)?;
        if got != quiver.e() {
            return Err(KlrError::Characteristic {
                got,
                want: quiver.e(),
            });
        }
        let case = if q.is_one() {
            KlrCase::Degenerate
        } else if got == 0 {
            KlrCase::Generic
        } else {
            KlrCase::RootOfUnity
        };
        let big_q = quiver
            .multicharge()
            .iter()
            .map(|&k| q_of(&q, case, k))
            .collect();
        let params = HeckeParams::new(n, q, big_q)?;
        Ok(KlrConfig {
            quiver,
            case,
            params,
        })
    }

    pub fn quiver(&self) -> &QuiverData {
        &self.quiver
    }

    pub fn case(&self) -> KlrCase {
        self.case
    }

    pub fn params(&self) -> &HeckeParams<F> {
        &self.params
    }

    pub fn q(&self) -> &F {
        self.params.q()
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn degenerate(&self) -> bool {
        self.case == KlrCase::Degenerate
    }

    /// The same data in rank `n`.
    pub fn with_rank(&self, n: usize) -> Self {
        KlrConfig {
            quiver: self.quiver.clone(),
            case: self.case,
            params: self.params.with_rank(n),
        }
    }

    /// `q_i`: the power `q^i`, or `i` itself when `q = 1`.
    pub fn q_res(&self, i: Residue) -> F {
        q_of(self.q(), self.case, i)
    }

    /// The residues that can occur as eigenvalue labels of some `L_k`: all
    /// of `I` when `e > 0`, and `kappa_s + d` with `|d| < n` when `e = 0`.
    pub fn residues(&self) -> Vec<Residue> {
        if let Some(v) = self.quiver.vertices() {
            return v;
        }
        let n = self.n() as i64;
        let mut out: Vec<Residue> = self
            .quiver
            .multicharge()
            .iter()
            .flat_map(|&k| (1 - n..n).map(move |d| k + d))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn q_of<F: Scalar>(q: &F, case: KlrCase, i: Residue) -> F {
    match case {
        KlrCase::Degenerate => q.from_i64_like(i),
        _ => q.pow_i64(i).expect("q is invertible"),
    }
}
