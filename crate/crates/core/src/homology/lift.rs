//! Chain maps between free complexes lifted from a map in degree 0.

use super::complex::FreeComplex;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::groebner::{Column, GbOptions, ModuleGb};
use crate::polyarith::{Polynomial, Ring};

/// A chain map `c: source -> target`, `maps[p]: source_p -> target_p`.
#[derive(Clone, Debug)]
pub struct ComparisonLift {
    pub maps: Vec<Matrix>,
}

impl ComparisonLift {
    /// `d^T_p c_p = c_{p-1} d^S_p` for every `p`, exactly.
    pub fn commutes(&self, source: &FreeComplex, target: &FreeComplex) -> bool {
        let ring = &source.ring;
        for p in 1..self.maps.len() {
            let lhs = match target.d(p) {
                Some(d) => d.mul(ring, &self.maps[p]),
                None => Matrix::zero(ring, target.rank(p - 1), source.rank(p)),
            };
            let rhs = self.maps[p - 1].mul(ring, source.d(p).unwrap());
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// `c_p`, or the zero map beyond the computed range.
    pub fn map(&self, ring: &Ring, source: &FreeComplex, target: &FreeComplex, p: usize) -> Matrix {
        self.maps
            .get(p)
            .cloned()
            .unwrap_or_else(|| Matrix::zero(ring, target.rank(p), source.rank(p)))
    }
}

/// Solves `d x = v` for columns of the image of `d`.
pub struct ImageSolver {
    gb: Option<ModuleGb>,
    ring: Ring,
    ncols: usize,
}

impl ImageSolver {
    pub fn new(ring: &Ring, d: &Matrix, target_shifts: &[i64]) -> Result<Self> {
        let cols = d.columns();
        let gb = if cols.iter().all(|c| c.iter().all(|p| p.is_zero())) {
            None
        } else {
            let opts = GbOptions {
                track: true,
                degree_cap: None,
            };
            Some(ModuleGb::with_options(ring, target_shifts, &cols, &opts)?)
        };
        Ok(ImageSolver {
            gb,
            ring: ring.clone(),
            ncols: d.cols,
        })
    }

    pub fn solve(&self, v: &[Polynomial]) -> Option<Column> {
        let zero = vec![Polynomial::zero(&self.ring); self.ncols];
        if v.iter().all(|p| p.is_zero()) {
            return Some(zero);
        }
        let gb = self.gb.as_ref()?;
        let (q, r) = gb.divide(v);
        if r.iter().any(|p| !p.is_zero()) {
            return None;
        }
        let cof = gb.cofactors.as_ref().unwrap();
        let mut x = zero;
        for (k, qk) in q.iter().enumerate() {
            if qk.is_zero() {
                continue;
            }
            for (l, c) in cof[k].iter().enumerate() {
                if !c.is_zero() {
                    x[l] = &x[l] + &(qk * c);
                }
            }
        }
        Some(x)
    }
}

/// Lifts `phi0: source_0 -> target_0` to a chain map, assuming `target` is
/// acyclic in positive degrees and `phi0` sends the relations of the source
/// module into those of the target module.
pub fn lift_map(
    source: &FreeComplex,
    target: &FreeComplex,
    phi0: &Matrix,
) -> Result<ComparisonLift> {
    let ring = &source.ring;
    if phi0.rows != target.rank(0) || phi0.cols != source.rank(0) {
        return Err(Error::InvalidArgument("phi0 has the wrong shape".into()));
    }
    let mut maps = vec![phi0.clone()];
    for p in 1..=source.length() {
        let ds = source.d(p).unwrap();
        let img = maps[p - 1].mul(ring, ds);
        let rows = target.rank(p);
        let solver = match target.d(p) {
            Some(dt) => Some(ImageSolver::new(ring, dt, &target.degrees[p - 1])?),
            None => None,
        };
        let mut cols: Vec<Column> = Vec::with_capacity(source.rank(p));
        for j in 0..img.cols {
            let v = img.column(j);
            let x = match &solver {
                Some(s) => s.solve(&v),
                None if v.iter().all(|q| q.is_zero()) => Some(Vec::new()),
                None => None,
            };
            match x {
                Some(x) => cols.push(x),
                None => {
                    return Err(Error::LiftFailed(format!(
                        "position {p}, column {j} is not in the image"
                    )))
                }
            }
        }
        maps.push(Matrix::from_columns(ring, rows, &cols));
    }
    let lift = ComparisonLift { maps };
    if !lift.commutes(source, target) {
        return Err(Error::Internal("lifted map does not commute".into()));
    }
    Ok(lift)
}

/// Mapping cone of `c: a -> b`: `Cone_p = b_p ⊕ a_{p-1}`.
pub fn mapping_cone(a: &FreeComplex, b: &FreeComplex, c: &ComparisonLift) -> Result<FreeComplex> {
    let ring = &a.ring;
    let len = b.length().max(a.length() + 1);
    let deg = |p: usize| -> Vec<i64> {
        let mut d = b.degrees.get(p).cloned().unwrap_or_default();
        if p >= 1 {
            d.extend(a.degrees.get(p - 1).cloned().unwrap_or_default());
        }
        d
    };
    let degrees: Vec<Vec<i64>> = (0..=len).map(deg).collect();
    let mut maps = Vec::with_capacity(len);
    for p in 1..=len {
        let (rb1, ra2) = (b.rank(p - 1), if p >= 2 { a.rank(p - 2) } else { 0 });
        let (rb, ra1) = (b.rank(p), a.rank(p - 1));
        let mut m = Matrix::zero(ring, rb1 + ra2, rb + ra1);
        if let Some(d) = b.d(p) {
            for i in 0..rb1 {
                for j in 0..rb {
                    m.entries[i][j] = d.entries[i][j].clone();
                }
            }
        }
        let cp = c.map(ring, a, b, p - 1);
        for i in 0..rb1 {
            for j in 0..ra1 {
                m.entries[i][rb + j] = cp.entries[i][j].clone();
            }
        }
        if p >= 2 {
            if let Some(d) = a.d(p - 1) {
                for i in 0..ra2 {
                    for j in 0..ra1 {
                        m.entries[rb1 + i][rb + j] = -&d.entries[i][j];
                    }
                }
            }
        }
        maps.push(m);
    }
    FreeComplex::new(ring, degrees, maps)
}
