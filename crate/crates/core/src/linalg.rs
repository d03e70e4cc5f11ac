//! Dense exact linear algebra over the rationals.
//!
//! Rank computations go through fraction-free (Bareiss) elimination on
//! integer-scaled rows; kernels and solves use rational Gauss-Jordan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyarith::Rational;

pub type Row = Vec<Rational>;

/// Clears denominators of a rational row.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in row {
        if !c.is_zero() {
            den = den.lcm(c.denom());
        }
    }
    row.iter().map(|c| c.numer() * (&den / c.denom())).collect()
}

/// Rank by fraction-free elimination.
pub fn rank(rows: &[Row]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    bareiss_rank(&mut m)
}

/// Bareiss elimination in place; returns the rank.
pub fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            if m[i][c].is_zero() {
                for j in c + 1..ncols {
                    let v = &m[i][j] * &m[r][c];
                    m[i][j] = v / &prev;
                }
            } else {
                for j in c + 1..ncols {
                    let v = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                    m[i][j] = v / &prev;
                }
                m[i][c] = BigInt::zero();
            }
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Row], ncols: usize) -> (Vec<Row>, Vec<usize>) {
    let mut m: Vec<Row> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// A subspace of `Q^ncols` held in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ncols: usize,
    pub rows: Vec<Row>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ncols: usize) -> Self {
        Subspace {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ncols: usize) -> Self {
        let rows = (0..ncols)
            .map(|i| {
                let mut r = vec![Rational::zero(); ncols];
                r[i] = Rational::one();
                r
            })
            .collect();
        Subspace {
            ncols,
            rows,
            pivots: (0..ncols).collect(),
        }
    }

    pub fn span(vectors: &[Row], ncols: usize) -> Self {
        let (rows, pivots) = rref(vectors, ncols);
        Subspace {
            ncols,
            rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the echelon basis; zero iff `v` lies in the space.
    pub fn reduce(&self, v: &[Rational]) -> Row {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &f * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Coordinates of the non-pivot positions: a basis-free quotient map
    /// `Q^ncols -> Q^ncols / self`.
    pub fn quotient_coords(&self, v: &[Rational]) -> Row {
        let red = self.reduce(v);
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        red.into_iter()
            .enumerate()
            .filter(|(i, _)| !is_pivot[*i])
            .map(|(_, c)| c)
            .collect()
    }
}

/// Basis of `{ v : A v = 0 }` where `A` is given by its rows.
pub fn kernel(rows: &[Row], ncols: usize) -> Vec<Row> {
    let (r, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

/// Basis of `{ v : v^T A = 0 }`, the left kernel (rows given).
pub fn left_kernel(rows: &[Row], ncols: usize) -> Vec<Row> {
    let t = transpose(rows, ncols);
    kernel(&t, rows.len())
}

pub fn transpose(rows: &[Row], ncols: usize) -> Vec<Row> {
    (0..ncols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Solves `x^T A = b` (b a combination of the rows of `A`), if possible.
pub fn solve_left(rows: &[Row], b: &[Rational]) -> Option<Row> {
    let ncols = b.len();
    let m = rows.len();
    // Columns of the augmented system: unknowns are the row coefficients.
    let mut sys: Vec<Row> = (0..ncols)
        .map(|j| {
            let mut r: Row = rows.iter().map(|row| row[j].clone()).collect();
            r.push(b[j].clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&sys, m + 1);
    if pivots.last() == Some(&m) {
        return None;
    }
    let mut x = vec![Rational::zero(); m];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[m].clone();
    }
    sys.clear();
    Some(x)
}

/// Determinant by fraction-free elimination.
pub fn det(a: &[Row]) -> Rational {
    let n = a.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = Rational::one();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| {
            let ir = integer_row(r);
            let nz = r.iter().zip(&ir).find(|(c, _)| !c.is_zero());
            if let Some((c, i)) = nz {
                scale *= c / Rational::from_integer(i.clone());
            }
            ir
        })
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let v = &m[i][j] * &m[c][c] - &m[i][c] * &m[c][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    let d = Rational::from_integer(m[n - 1][n - 1].clone()) * scale;
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn mat_mul(a: &[Row], b: &[Row]) -> Vec<Row> {
    let inner = b.len();
    let ncols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|r| {
            (0..ncols)
                .map(|j| {
                    let mut s = Rational::zero();
                    for k in 0..inner {
                        if !r[k].is_zero() && !b[k][j].is_zero() {
                            s += &r[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn is_zero_row(r: &[Rational]) -> bool {
    r.iter().all(|c| c.is_zero())
}

pub fn sign_of(c: &Rational) -> i32 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::rat;

    fn m(rows: &[&[i64]]) -> Vec<Row> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_det() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(rank(&a), 2);
        assert_eq!(det(&a), rat(0));
        let b = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(det(&b), rat(5));
        let c = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(&c), rat(-1));
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        for row in &a {
            let s: Rational = row.iter().zip(&k[0]).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_left_combination() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        let x = solve_left(&a, &[rat(2), rat(3), rat(5)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(3)]);
        assert!(solve_left(&a, &[rat(1), rat(1), rat(0)]).is_none());
    }
}
