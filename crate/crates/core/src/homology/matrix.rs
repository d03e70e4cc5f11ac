//! Matrices with polynomial entries, acting on column vectors.

use crate::groebner::Column;
use crate::polyarith::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries.
    pub entries: Vec<Vec<Polynomial>>,
}

impl Matrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![vec![Polynomial::zero(ring); cols]; rows],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i][i] = Polynomial::one(ring);
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(ring: &Ring, rows: usize, cols: &[Column]) -> Self {
        let mut m = Self::zero(ring, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, p) in c.iter().enumerate() {
                m.entries[i][j] = p.clone();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Column {
        (0..self.rows).map(|i| self.entries[i][j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Column> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self, ring: &Ring) -> Matrix {
        let mut t = Matrix::zero(ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j][i] = self.entries[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, ring: &Ring, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out = Matrix::zero(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] = &out.entries[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, ring: &Ring, v: &[Polynomial]) -> Column {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut out = vec![Polynomial::zero(ring); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.entries[i].iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    *o = &*o + &(a * b);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|p| p.is_zero())
    }

    pub fn scale(&self, c: &crate::polyarith::Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|p| p.scale(c)).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|p| -p).collect())
                .collect(),
        }
    }

    /// Whether entry `(i, j)` is homogeneous of degree
    /// `col_degrees[j] - row_degrees[i]` (or zero) for every entry.
    pub fn is_graded(&self, row_degrees: &[i64], col_degrees: &[i64]) -> bool {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = &self.entries[i][j];
                if p.is_zero() {
                    continue;
                }
                if !p.is_homogeneous() || p.degree() != Some(col_degrees[j] - row_degrees[i]) {
                    return false;
                }
            }
        }
        true
    }
}
