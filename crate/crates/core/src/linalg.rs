//! Dense exact linear algebra by Gaussian elimination.
//!
//! Every scalar type here is exact and kept in canonical form, so plain
//! elimination with exact division is used for all fields.

use crate::hecke::Element;
use crate::scalars::Scalar;

/// A dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    /// The `rows x cols` zero matrix; `witness` fixes the field.
    pub fn zeros(rows: usize, cols: usize, witness: &F) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![witness.zero_like(); rows * cols],
        }
    }

    pub fn identity(n: usize, witness: &F) -> Self {
        let mut m = Matrix::zeros(n, n, witness);
        for i in 0..n {
            m.set(i, i, witness.one_like());
        }
        m
    }

    /// Build from rows of equal length.
    pub fn from_rows(rows: Vec<Vec<F>>, witness: &F) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(r, c, witness);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix {
            rows: self.cols,
            cols: self.rows,
            data: self.data.clone(),
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let w = self.data.first().or(other.data.first());
        let zero = match w {
            Some(w) => w.zero_like(),
            None => return Matrix { rows: self.rows, cols: other.cols, data: Vec::new() },
        };
        let mut out = Matrix::zeros(self.rows, other.cols, &zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc: Option<F> = None;
                for (a, b) in self.row(i).iter().zip(v) {
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let t = a.clone() * b.clone();
                    acc = Some(match acc {
                        Some(x) => x + t,
                        None => t,
                    });
                }
                acc.unwrap_or_else(|| self.zero_hint(v))
            })
            .collect()
    }

    fn zero_hint(&self, v: &[F]) -> F {
        self.data
            .first()
            .or(v.first())
            .map(F::zero_like)
            .expect("non-empty matrix")
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("non-zero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pr = m.get(r, j).clone();
                    if pr.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).clone() - f.clone() * pr;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The inverse of a square matrix, `None` if it is singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let w = self.data[0].clone();
        let mut aug = Matrix::zeros(n, 2 * n, &w);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, w.one_like());
        }
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut out = Matrix::zeros(n, n, &w);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// Some solution of `self * x = b`, or `None` if there is none.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let w = self.data.first().or(b.first())?.clone();
        let mut aug = Matrix::zeros(self.rows, self.cols + 1, &w);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (red, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![w.zero_like(); self.cols];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }
}

/// Coordinates with respect to a basis of the algebra, given as elements.
///
/// The basis elements are the columns of a square matrix over the normal
/// form labels, which is inverted once.
#[derive(Debug, Clone)]
pub struct BasisSolver<F> {
    dim: usize,
    inverse: Matrix<F>,
}

impl<F: Scalar> BasisSolver<F> {
    /// Returns `None` when the elements do not form a basis of the
    /// `dim`-dimensional algebra.
    pub fn new(basis: &[Element<F>], dim: usize, witness: &F) -> Option<Self> {
        if basis.len() != dim {
            return None;
        }
        let mut m = Matrix::zeros(dim, dim, witness);
        for (j, b) in basis.iter().enumerate() {
            for (label, c) in b.iter() {
                m.set(label, j, c.clone());
            }
        }
        Some(BasisSolver {
            dim,
            inverse: m.inverse()?,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The coordinates of `x`.
    pub fn coordinates(&self, x: &Element<F>) -> Vec<F> {
        let mut out = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let row = self.inverse.row(i);
            let mut acc = row[0].zero_like();
            for (label, c) in x.iter() {
                let a = &row[label];
                if !a.is_zero() {
                    acc = acc + a.clone() * c.clone();
                }
            }
            out.push(acc);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Fp, Rational};

    fn f(v: i64) -> Fp {
        Fp::new(v, 7).unwrap()
    }

    #[test]
    fn inverse_and_rank() {
        let w = f(0);
        let m = Matrix::from_rows(vec![vec![f(1), f(2)], vec![f(3), f(4)]], &w);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, &w));
        let s = Matrix::from_rows(vec![vec![f(1), f(2)], vec![f(2), f(4)]], &w);
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
        assert_eq!(s.transpose().rank(), 1);
    }

    #[test]
    fn solve_over_rationals() {
        let r = Rational::from_i64;
        let w = r(0);
        let m = Matrix::from_rows(vec![vec![r(2), r(1)], vec![r(1), r(3)]], &w);
        let x = m.solve(&[r(3), r(4)]).unwrap();
        assert_eq!(x, vec![r(1), r(1)]);
        assert_eq!(m.apply(&x), vec![r(3), r(4)]);
        let s = Matrix::from_rows(vec![vec![r(1), r(1)], vec![r(1), r(1)]], &w);
        assert!(s.solve(&[r(1), r(2)]).is_none());
    }
}
