//! Graded decomposition matrices by character solving, the graded Cartan
//! matrix, and an ungraded decomposition matrix from Murphy-basis Gram
//! ranks used as an independent oracle.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use super::basis::{Basis, Block, Graded, Pair};
use super::cells::Character;
use super::GradedError;
use crate::combin::{standard_tableaux, Multipartition, Residue};
use crate::linalg::Matrix;
use crate::scalars::{Laurent, Rational, Scalar};

/// A matrix of Laurent polynomials with multipartition labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    pub rows: Vec<Multipartition>,
    pub cols: Vec<Multipartition>,
    pub entries: Vec<Vec<Laurent>>,
}

impl LaurentMatrix {
    /// The entry in row `lam`, column `mu`.
    pub fn entry(&self, lam: &Multipartition, mu: &Multipartition) -> Option<&Laurent> {
        let i = self.rows.iter().position(|r| r == lam)?;
        let j = self.cols.iter().position(|c| c == mu)?;
        Some(&self.entries[i][j])
    }

    /// Every entry evaluated at `t = 1`.
    pub fn at_one(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(Laurent::at_one).collect())
            .collect()
    }

    /// `Dec^T Dec`, labelled by the columns.
    pub fn cartan(&self) -> LaurentMatrix {
        let k = self.cols.len();
        let mut entries = vec![vec![Laurent::zero(); k]; k];
        for (a, row_a) in entries.iter_mut().enumerate() {
            for (b, cell) in row_a.iter_mut().enumerate() {
                for row in &self.entries {
                    *cell = &*cell + &(&row[a] * &row[b]);
                }
            }
        }
        LaurentMatrix {
            rows: self.cols.clone(),
            cols: self.cols.clone(),
            entries,
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        let cols: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        let entries: Vec<Vec<Value>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(Laurent::to_json).collect())
            .collect();
        json!({"rows": rows, "cols": cols, "entries": entries})
    }

    /// Comma separated, with a header row of column labels. Labels are
    /// quoted because they contain commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("\"\"");
        for c in &self.cols {
            out.push_str(&format!(",\"{}\"", c));
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.entries) {
            out.push_str(&format!("\"{}\"", r));
            for e in row {
                out.push_str(&format!(",\"{}\"", e));
            }
            out.push('\n');
        }
        out
    }

    /// A LaTeX `tabular` with the same ordering as the other emitters.
    pub fn to_latex(&self) -> String {
        let mut out = format!("\\begin{{tabular}}{{l|{}}}\n", "c".repeat(self.cols.len()));
        let head: Vec<String> = self.cols.iter().map(|c| format!("$({})$", c)).collect();
        out.push_str(&format!(" & {} \\\\\n\\hline\n", head.join(" & ")));
        for (r, row) in self.rows.iter().zip(&self.entries) {
            let cells: Vec<String> = row
                .iter()
                .map(|e| if e.is_zero() { ".".to_string() } else { format!("${}$", e) })
                .collect();
            out.push_str(&format!("$({})$ & {} \\\\\n", r, cells.join(" & ")));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

/// Ungraded decomposition numbers `[S^lambda : D^mu]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UngradedDecomposition {
    pub rows: Vec<Multipartition>,
    pub cols: Vec<Multipartition>,
    pub entries: Vec<Vec<i64>>,
}

/// The unique solution of `target = sum_j x_j columns[j]` in non-negative
/// integers, or a description of what went wrong.
fn solve_counts<K: Ord + Clone>(columns: &[BTreeMap<K, i64>], target: &BTreeMap<K, i64>) -> Result<Vec<i64>, String> {
    let mut keys: Vec<K> = target.keys().cloned().collect();
    for c in columns {
        keys.extend(c.keys().cloned());
    }
    keys.sort();
    keys.dedup();
    if columns.is_empty() {
        return if target.values().all(|&v| v == 0) {
            Ok(Vec::new())
        } else {
            Err("no simple characters to solve with".into())
        };
    }
    let w = Rational::from_i64(0);
    let get = |m: &BTreeMap<K, i64>, k: &K| Rational::from_i64(m.get(k).copied().unwrap_or(0));
    let a = Matrix::from_rows(
        keys.iter()
            .map(|k| columns.iter().map(|c| get(c, k)).collect())
            .collect(),
        &w,
    );
    if a.rank() < columns.len() {
        return Err("the shifted simple characters are linearly dependent".into());
    }
    let b: Vec<Rational> = keys.iter().map(|k| get(target, k)).collect();
    let x = a.solve(&b).ok_or("no solution")?;
    if a.apply(&x) != b {
        return Err("non-zero residual".into());
    }
    x.into_iter()
        .map(|v| {
            if !v.0.is_integer() || v.0.is_negative() {
                return Err(format!("coefficient {} is not a non-negative integer", v));
            }
            v.0.to_integer().to_i64().ok_or_else(|| "coefficient overflow".to_string())
        })
        .collect()
}

fn flatten(ch: &Character) -> BTreeMap<(Vec<Residue>, i64), i64> {
    ch.iter().map(|(k, &v)| (k.clone(), v)).collect()
}

impl<F: Scalar> Graded<F> {
    /// The shapes of the block whose graded simple module is non-zero,
    /// with their characters.
    pub fn simple_characters(&self, block: &Block) -> Result<Vec<(Multipartition, Character)>, GradedError> {
        let mut out = Vec::new();
        for mu in &block.shapes {
            let ch = self.simple_character(mu)?;
            if !ch.is_zero() {
                out.push((mu.clone(), ch));
            }
        }
        Ok(out)
    }

    /// The graded decomposition matrix of the block: rows are the shapes,
    /// columns the shapes with `D^mu != 0`, and
    /// `ch S^lambda = sum d_{lambda mu}(t) ch D^mu` with shifts
    /// `t^k <-> D^mu<k>`. Fails unless the solution is unique, has
    /// non-negative integer coefficients, `d_{mu mu} = 1`, and
    /// `d_{lambda mu} != 0` only when `lambda >= mu`.
    pub fn decomposition_matrix(&self, block: &Block) -> Result<LaurentMatrix, GradedError> {
        let simples = self.simple_characters(block)?;
        let mut entries = Vec::new();
        for lam in &block.shapes {
            let target = self.specht_character(lam)?;
            let (lo, hi) = target.degree_range().expect("Specht modules are non-zero");
            let mut columns = Vec::new();
            let mut labels = Vec::new();
            for (m, (_, ch)) in simples.iter().enumerate() {
                let (dlo, dhi) = ch.degree_range().expect("non-zero");
                for k in (lo - dhi)..=(hi - dlo) {
                    columns.push(flatten(&ch.shift(k)));
                    labels.push((m, k));
                }
            }
            let x = solve_counts(&columns, &flatten(&target))
                .map_err(|e| GradedError::Theorem(format!("character solve for S^{}: {}", lam, e)))?;
            let mut row = vec![Laurent::zero(); simples.len()];
            for ((m, k), c) in labels.into_iter().zip(x) {
                if c != 0 {
                    row[m].add_term(k, c);
                }
            }
            entries.push(row);
        }
        let dec = LaurentMatrix {
            rows: block.shapes.clone(),
            cols: simples.into_iter().map(|(m, _)| m).collect(),
            entries,
        };
        for (j, mu) in dec.cols.iter().enumerate() {
            for (i, lam) in dec.rows.iter().enumerate() {
                let d = &dec.entries[i][j];
                if lam == mu && *d != Laurent::one() {
                    return Err(GradedError::Theorem(format!("d_({}),({}) = {} != 1", lam, mu, d)));
                }
                if !d.is_zero() && !lam.dominates(mu) {
                    return Err(GradedError::Theorem(format!(
                        "d_({}),({}) = {} but ({}) does not dominate ({})",
                        lam, mu, d, lam, mu
                    )));
                }
            }
        }
        Ok(dec)
    }

    /// The graded Cartan matrix `Dec^T Dec` of the block.
    pub fn cartan(&self, block: &Block) -> Result<LaurentMatrix, GradedError> {
        Ok(self.decomposition_matrix(block)?.cartan())
    }

    /// Row `t` of the Murphy cell module: coefficients of `m_{t^lambda v}`
    /// in `x` modulo more dominant shapes.
    fn murphy_row(&self, x: &crate::hecke::Element<F>, lam: &Multipartition) -> Result<Vec<F>, GradedError> {
        let tabs = standard_tableaux(lam);
        let top = &tabs[0];
        let w = self.witness();
        let mut row = vec![w.zero_like(); tabs.len()];
        for (j, c) in self.coordinates(x, Basis::Murphy)?.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p: &Pair = self.pair(j);
            let mu = p.shape();
            if mu == lam && &p.s == top {
                row[tabs.iter().position(|t| t == &p.t).expect("same shape")] = c;
            } else if !(mu != lam && mu.dominates(lam)) {
                return Err(GradedError::Theorem(format!(
                    "Murphy cell module of {}: stray term m_{}",
                    lam, p
                )));
            }
        }
        Ok(row)
    }

    /// Ungraded weight-space dimensions of `S^lambda` and `D^lambda` from
    /// the Murphy cell module: `rank E_i` and `rank E_i G E_i^T`, where
    /// `E_i` is the action of `e(i)` and `G` the Murphy Gram matrix.
    pub fn murphy_characters(
        &self,
        lam: &Multipartition,
    ) -> Result<(BTreeMap<Vec<Residue>, i64>, BTreeMap<Vec<Residue>, i64>), GradedError> {
        let tabs = standard_tableaux(lam);
        let top = tabs[0].clone();
        let h = self.hecke();
        let w = self.witness();
        let mut gram = Vec::new();
        for a in &tabs {
            let x = h.m_st(&top, a)?;
            let mut row = Vec::new();
            for b in &tabs {
                let prod = h.mul(&x, &h.m_st(b, &top)?);
                row.push(self.murphy_row(&prod, lam)?[0].clone());
            }
            gram.push(row);
        }
        let g = Matrix::from_rows(gram, &w);
        let mut spec = BTreeMap::new();
        let mut simple = BTreeMap::new();
        for i in self.klr().support() {
            let e = self.klr().e_idem(i);
            let mut rows = Vec::new();
            for t in &tabs {
                rows.push(self.murphy_row(&h.mul(&h.m_st(&top, t)?, &e), lam)?);
            }
            let ei = Matrix::from_rows(rows, &w);
            let r = ei.rank() as i64;
            if r > 0 {
                spec.insert(i.clone(), r);
            }
            let d = ei.mul(&g).mul(&ei.transpose()).rank() as i64;
            if d > 0 {
                simple.insert(i.clone(), d);
            }
        }
        Ok((spec, simple))
    }

    /// The ungraded decomposition matrix of the block computed from the
    /// Murphy basis alone.
    pub fn ungraded_decomposition(&self, block: &Block) -> Result<UngradedDecomposition, GradedError> {
        let mut chars = Vec::new();
        for lam in &block.shapes {
            chars.push(self.murphy_characters(lam)?);
        }
        let cols: Vec<usize> = (0..block.shapes.len()).filter(|&k| !chars[k].1.is_empty()).collect();
        let columns: Vec<BTreeMap<Vec<Residue>, i64>> = cols.iter().map(|&k| chars[k].1.clone()).collect();
        let mut entries = Vec::new();
        for (lam, (spec, _)) in block.shapes.iter().zip(&chars) {
            let x = solve_counts(&columns, spec)
                .map_err(|e| GradedError::Theorem(format!("ungraded solve for S^{}: {}", lam, e)))?;
            entries.push(x);
        }
        Ok(UngradedDecomposition {
            rows: block.shapes.clone(),
            cols: cols.into_iter().map(|k| block.shapes[k].clone()).collect(),
            entries,
        })
    }
}
