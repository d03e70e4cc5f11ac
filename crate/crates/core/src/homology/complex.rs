//! Graded free chain complexes and the Koszul complex.

use std::collections::HashMap;

use num_traits::Zero;

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::groebner::HilbertData;
use crate::linalg::{self, Row};
use crate::polyarith::{monomials_of_degree, Monomial, Polynomial, Rational, Ring};

/// `0 <- C_0 <- C_1 <- ... <- C_L` with `d_p: C_p -> C_{p-1}`.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    pub ring: Ring,
    /// Generator degrees of `C_p`, for `p = 0..=L`.
    pub degrees: Vec<Vec<i64>>,
    /// `maps[p - 1]` is `d_p`, a `rank C_{p-1} x rank C_p` matrix.
    pub maps: Vec<Matrix>,
}

impl FreeComplex {
    /// Builds a complex, checking shapes, grading and `d d = 0`.
    pub fn new(ring: &Ring, degrees: Vec<Vec<i64>>, maps: Vec<Matrix>) -> Result<Self> {
        let c = FreeComplex {
            ring: ring.clone(),
            degrees,
            maps,
        };
        if c.degrees.is_empty() || c.maps.len() + 1 != c.degrees.len() {
            return Err(Error::InvalidArgument(
                "complex needs one map per term above 0".into(),
            ));
        }
        for (k, m) in c.maps.iter().enumerate() {
            if m.rows != c.degrees[k].len() || m.cols != c.degrees[k + 1].len() {
                return Err(Error::InvalidArgument(format!(
                    "d_{} has the wrong shape",
                    k + 1
                )));
            }
        }
        if !c.is_graded() {
            return Err(Error::NotHomogeneous);
        }
        if !c.is_complex() {
            return Err(Error::InvalidArgument("d o d is not zero".into()));
        }
        Ok(c)
    }

    /// Index of the last term.
    pub fn length(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn rank(&self, p: usize) -> usize {
        self.degrees.get(p).map_or(0, |d| d.len())
    }

    /// `d_p`, if `1 <= p <= length`.
    pub fn d(&self, p: usize) -> Option<&Matrix> {
        if p == 0 {
            None
        } else {
            self.maps.get(p - 1)
        }
    }

    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&self.ring, &w[1]).is_zero())
    }

    pub fn is_graded(&self) -> bool {
        self.maps
            .iter()
            .enumerate()
            .all(|(k, m)| m.is_graded(&self.degrees[k], &self.degrees[k + 1]))
    }

    /// Drops trailing zero terms.
    pub fn trimmed(mut self) -> Self {
        while self.degrees.len() > 1 && self.degrees.last().unwrap().is_empty() {
            self.degrees.pop();
            self.maps.pop();
        }
        self
    }

    /// Graded Betti numbers: for each `p`, sorted `(degree, count)` pairs.
    pub fn betti(&self) -> Vec<Vec<(i64, usize)>> {
        self.degrees
            .iter()
            .map(|ds| {
                let mut out: Vec<(i64, usize)> = Vec::new();
                let mut sorted = ds.clone();
                sorted.sort();
                for d in sorted {
                    match out.last_mut() {
                        Some((e, c)) if *e == d => *c += 1,
                        _ => out.push((d, 1)),
                    }
                }
                out
            })
            .collect()
    }

    /// The dual complex `Hom(C, P)`, reindexed homologically:
    /// term `q` is `C_{L-q}^*` and its differential is `d_{L-q+1}^T`.
    pub fn dual(&self) -> FreeComplex {
        let l = self.length();
        let degrees = (0..=l)
            .map(|q| self.degrees[l - q].iter().map(|d| -d).collect())
            .collect();
        let maps = (1..=l)
            .map(|q| self.maps[l - q].transpose(&self.ring))
            .collect();
        FreeComplex {
            ring: self.ring.clone(),
            degrees,
            maps,
        }
    }

    /// Monomial basis of `(C_p)_d`: pairs (generator, monomial).
    fn graded_basis(&self, p: usize, d: i64) -> Vec<(usize, Monomial)> {
        let w = self.ring.weights();
        let mut out = Vec::new();
        if let Some(ds) = self.degrees.get(p) {
            for (j, &s) in ds.iter().enumerate() {
                for m in monomials_of_degree(w, d - s) {
                    out.push((j, m));
                }
            }
        }
        out
    }

    /// Rank of `d_p` restricted to degree `d`, by dense elimination.
    pub fn rank_in_degree(&self, p: usize, d: i64) -> usize {
        let Some(m) = self.d(p) else { return 0 };
        let src = self.graded_basis(p, d);
        let dst = self.graded_basis(p - 1, d);
        let index: HashMap<(usize, &Monomial), usize> = dst
            .iter()
            .enumerate()
            .map(|(k, (j, m))| ((*j, m), k))
            .collect();
        let rows: Vec<Row> = src
            .iter()
            .map(|(j, mon)| {
                let mut row = vec![Rational::zero(); dst.len()];
                for i in 0..m.rows {
                    let e = &m.entries[i][*j];
                    for (t, c) in e.terms() {
                        let k = index[&(i, &t.mul(mon))];
                        row[k] += c;
                    }
                }
                row
            })
            .collect();
        linalg::rank(&rows)
    }

    /// `dim H_p(C)_d`, computed without Gröbner bases.
    pub fn homology_dim(&self, p: usize, d: i64) -> usize {
        let dim = self.graded_basis(p, d).len();
        dim - self.rank_in_degree(p, d) - self.rank_in_degree(p + 1, d)
    }

    pub fn homology_hilbert(&self, p: usize, lo: i64, hi: i64) -> HilbertData {
        let vals = (lo..=hi).map(|d| self.homology_dim(p, d)).collect();
        HilbertData::new(lo, vals, false)
    }

    /// Whether `H_p` vanishes for `p >= 1` in every degree of `[lo, hi]`.
    pub fn is_acyclic_in(&self, lo: i64, hi: i64) -> bool {
        (1..=self.length()).all(|p| (lo..=hi).all(|d| self.homology_dim(p, d) == 0))
    }
}

/// Size-`p` subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(0, n, p, &mut Vec::new(), &mut out);
    }
    out
}

/// Koszul complex with `d(e_{i_1} ∧ ... ∧ e_{i_p}) = Σ_j (-1)^{j+1} f_{i_j} e_{... î_j ...}`.
/// The basis of `K_p` is the lexicographically ordered `p`-subsets.
pub fn koszul_complex(ring: &Ring, fs: &[Polynomial]) -> Result<FreeComplex> {
    if fs.iter().any(|f| !f.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let n = fs.len();
    let degs: Vec<i64> = fs.iter().map(|f| f.degree().unwrap_or(0)).collect();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|p| subsets(n, p)).collect();
    let degrees = bases
        .iter()
        .map(|b| b.iter().map(|s| s.iter().map(|&i| degs[i]).sum()).collect())
        .collect();
    let mut maps = Vec::with_capacity(n);
    for p in 1..=n {
        let pos: HashMap<&Vec<usize>, usize> = bases[p - 1]
            .iter()
            .enumerate()
            .map(|(k, s)| (s, k))
            .collect();
        let mut m = Matrix::zero(ring, bases[p - 1].len(), bases[p].len());
        for (c, s) in bases[p].iter().enumerate() {
            for (j, &i) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(j);
                let f = if j % 2 == 0 { fs[i].clone() } else { -&fs[i] };
                m.entries[pos[&rest]][c] = f;
            }
        }
        maps.push(m);
    }
    FreeComplex::new(ring, degrees, maps)
}

/// Result of [`self_duality_check`].
#[derive(Clone, Debug)]
pub struct SelfDuality {
    /// `alphas[p]`: `K_p -> K_{n-p}^*`, `e_I ↦ sign(σ) φ_{I^c}`.
    pub alphas: Vec<Matrix>,
    /// `signs[p - 1] = ε_p` with `α_{p-1} d_p = ε_p d_{n-p+1}^T α_p`; `None`
    /// if no sign works.
    pub signs: Vec<Option<i8>>,
}

impl SelfDuality {
    pub fn holds(&self) -> bool {
        self.signs.iter().all(|s| s.is_some())
    }
}

/// Sign of the shuffle putting `(I, I^c)` into increasing order.
pub fn shuffle_sign(set: &[usize]) -> i8 {
    let mut inv = 0;
    for &a in set {
        inv += (0..a).filter(|b| !set.contains(b)).count();
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Verifies at matrix level that `α` intertwines the Koszul differentials
/// with their transposes, and records the sign in each position.
pub fn self_duality_check(ring: &Ring, fs: &[Polynomial]) -> Result<SelfDuality> {
    let k = koszul_complex(ring, fs)?;
    let n = fs.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|p| subsets(n, p)).collect();
    let mut alphas = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let target = &bases[n - p];
        let mut m = Matrix::zero(ring, target.len(), bases[p].len());
        for (c, s) in bases[p].iter().enumerate() {
            let comp: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
            let r = target.iter().position(|t| *t == comp).unwrap();
            m.entries[r][c] = Polynomial::from_int(ring, shuffle_sign(s) as i64);
        }
        alphas.push(m);
    }
    let mut signs = Vec::with_capacity(n);
    for p in 1..=n {
        let lhs = alphas[p - 1].mul(ring, k.d(p).unwrap());
        let rhs = k
            .d(n - p + 1)
            .unwrap()
            .transpose(ring)
            .mul(ring, &alphas[p]);
        let sign = if lhs == rhs {
            Some(1)
        } else if lhs == rhs.neg() {
            Some(-1)
        } else {
            None
        };
        signs.push(sign);
    }
    Ok(SelfDuality { alphas, signs })
}

pub(crate) fn is_unit_entry(p: &Polynomial) -> bool {
    p.is_constant() && !p.is_zero()
}
