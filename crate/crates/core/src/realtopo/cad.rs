//! Cylindrical algebraic decomposition of the plane adapted to one
//! polynomial `f(x, y)`.
//!
//! The projection is `lc_y(f) · psc_j(f, ∂f/∂y)` where `psc_j` is the first
//! principal subresultant coefficient that does not vanish identically; over
//! each interval avoiding its roots the number of distinct real roots of
//! `f(x, ·)` is constant. Critical fibres are handled exactly in `Q(α)`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::alg::{isolate_roots_k, KPoly, KRing, RealAlg};
use super::upoly::{isolate_roots, rational_str, simplest_between, RootInterval, UPoly};
use crate::error::{Error, Result};
use crate::polyarith::{Polynomial, Rational};

/// One coordinate of a sample point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coord {
    Exact(#[serde(with = "rational_str")] Rational),
    /// An isolating interval of an irrational coordinate.
    Between(
        #[serde(with = "rational_str")] Rational,
        #[serde(with = "rational_str")] Rational,
    ),
}

impl Coord {
    pub fn approx(&self) -> f64 {
        match self {
            Coord::Exact(r) => super::upoly::rat_to_f64(r),
            Coord::Between(a, b) => {
                super::upoly::rat_to_f64(&((a + b) / Rational::from_integer(2.into())))
            }
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Coord::Exact(r) => Some(r),
            Coord::Between(..) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CADCell {
    pub dim: u8,
    /// Even indices are open columns, odd ones lie over critical `x`.
    pub column: usize,
    pub stack: usize,
    pub x: Coord,
    pub y: Coord,
    pub sign: i32,
}

#[derive(Clone, Debug)]
pub struct CADComplex {
    /// Squarefree projection polynomial in `x`.
    pub projection: UPoly,
    pub critical: Vec<RootInterval>,
    pub cells: Vec<CADCell>,
}

impl CADComplex {
    /// `χ_c` of the cells with the given sign.
    pub fn euler_c(&self, sign: i32) -> i64 {
        self.cells
            .iter()
            .filter(|c| c.sign == sign)
            .map(|c| euler_term(c.dim))
            .sum()
    }

    pub fn euler_total(&self) -> i64 {
        self.cells.iter().map(|c| euler_term(c.dim)).sum()
    }

    /// `counts[dim][sign + 1]`.
    pub fn counts(&self) -> [[usize; 3]; 3] {
        let mut out = [[0; 3]; 3];
        for c in &self.cells {
            out[c.dim as usize][(c.sign + 1) as usize] += 1;
        }
        out
    }

    pub fn columns(&self) -> usize {
        2 * self.critical.len() + 1
    }
}

pub(crate) fn euler_term(dim: u8) -> i64 {
    if dim % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `f` as a polynomial in `y` with coefficients in `Q[x]`.
pub type BiPoly = Vec<UPoly>;

pub fn to_bipoly(f: &Polynomial) -> Result<BiPoly> {
    let n = f.ring().nvars();
    if n != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a polynomial in 2 variables, got {n}"
        )));
    }
    let dy = f
        .terms()
        .iter()
        .map(|(m, _)| m.exp(1) as usize)
        .max()
        .unwrap_or(0);
    let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); dy + 1];
    for (m, c) in f.terms() {
        let (i, j) = (m.exp(0) as usize, m.exp(1) as usize);
        let row = &mut rows[j];
        if row.len() <= i {
            row.resize(i + 1, Rational::zero());
        }
        row[i] += c;
    }
    let mut out: BiPoly = rows.into_iter().map(UPoly::from_coeffs).collect();
    while out.last().is_some_and(UPoly::is_zero) {
        out.pop();
    }
    Ok(out)
}

fn bideriv_y(f: &BiPoly) -> BiPoly {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
        .collect()
}

/// Fraction-free determinant over `Q[x]`.
pub fn det_bareiss(mut m: Vec<Vec<UPoly>>) -> UPoly {
    let n = m.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut prev = UPoly::one();
    let mut neg = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return UPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            neg = !neg;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = UPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if neg {
        -&d
    } else {
        d
    }
}

/// Principal subresultant coefficient `psc_j(a, b)` in `y`.
pub fn psc(a: &BiPoly, b: &BiPoly, j: usize) -> UPoly {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n - 2 * j;
    let top = m + n - j - 1;
    let coeff = |p: &BiPoly, e: usize, shift: usize| -> UPoly {
        if e < shift {
            return UPoly::zero();
        }
        p.get(e - shift).cloned().unwrap_or_else(UPoly::zero)
    };
    let mut rows = Vec::with_capacity(size);
    for k in (0..n - j).rev() {
        rows.push((0..size).map(|c| coeff(a, top - c, k)).collect());
    }
    for k in (0..m - j).rev() {
        rows.push((0..size).map(|c| coeff(b, top - c, k)).collect());
    }
    det_bareiss(rows)
}

/// The polynomial in `x` whose roots are the critical columns.
pub fn projection(f: &BiPoly) -> UPoly {
    let lc = f.last().cloned().unwrap_or_else(UPoly::zero);
    if f.len() <= 1 {
        return lc.squarefree();
    }
    let fy = bideriv_y(f);
    let n = fy.len() - 1;
    let mut p = lc.clone();
    for j in 0..n {
        let s = psc(f, &fy, j);
        if !s.is_zero() {
            p = &p * &s;
            break;
        }
    }
    super::upoly::primitive_part(&p).squarefree()
}

/// Rational points in each gap of a sorted list of isolating intervals whose
/// endpoints are not roots (exact roots may have `lo == hi`).
pub(crate) fn gap_samples(ivs: &[(Rational, Rational)]) -> Vec<Rational> {
    if ivs.is_empty() {
        return vec![Rational::zero()];
    }
    let mut out = Vec::with_capacity(ivs.len() + 1);
    let first = &ivs[0].0;
    out.push(simplest_between(
        &(first - first.abs() - Rational::one()),
        first,
    ));
    for w in ivs.windows(2) {
        let (a, b) = (&w[0].1, &w[1].0);
        out.push(if a < b {
            simplest_between(a, b)
        } else {
            a.clone()
        });
    }
    let last = &ivs[ivs.len() - 1].1;
    out.push(simplest_between(
        last,
        &(last + last.abs() + Rational::one()),
    ));
    out
}

fn eval_x(f: &BiPoly, x: &Rational) -> UPoly {
    UPoly::from_coeffs(f.iter().map(|c| c.eval(x)).collect())
}

fn coord_of(iv: &RootInterval) -> Coord {
    match iv.as_rational() {
        Some(r) => Coord::Exact(r.clone()),
        None => Coord::Between(iv.lo.clone(), iv.hi.clone()),
    }
}

fn open_stack(f: &BiPoly, x: &Rational, column: usize, out: &mut Vec<CADCell>) {
    let g = eval_x(f, x);
    let roots = isolate_roots(&g);
    let ivs: Vec<_> = roots.iter().map(|r| (r.lo.clone(), r.hi.clone())).collect();
    let samples = gap_samples(&ivs);
    for (k, s) in samples.iter().enumerate() {
        out.push(CADCell {
            dim: 2,
            column,
            stack: 2 * k,
            x: Coord::Exact(x.clone()),
            y: Coord::Exact(s.clone()),
            sign: g.sign_at(s),
        });
        if let Some(r) = roots.get(k) {
            out.push(CADCell {
                dim: 1,
                column,
                stack: 2 * k + 1,
                x: Coord::Exact(x.clone()),
                y: coord_of(r),
                sign: 0,
            });
        }
    }
}

fn critical_stack(f: &BiPoly, alpha: &mut RealAlg, column: usize, out: &mut Vec<CADCell>) {
    let g: KPoly = f.iter().map(|c| alpha.reduce(c)).collect();
    let g = KRing { alpha: &mut *alpha }.normalize(&g);
    let x = coord_of(alpha.interval());
    if g.is_empty() {
        out.push(CADCell {
            dim: 1,
            column,
            stack: 0,
            x,
            y: Coord::Exact(Rational::zero()),
            sign: 0,
        });
        return;
    }
    let roots = isolate_roots_k(alpha, &g);
    let ivs: Vec<_> = roots.iter().map(|r| (r.lo.clone(), r.hi.clone())).collect();
    let samples = gap_samples(&ivs);
    let x = coord_of(alpha.interval());
    for (k, s) in samples.iter().enumerate() {
        let sign = KRing { alpha: &mut *alpha }.sign_at(&g, s);
        out.push(CADCell {
            dim: 1,
            column,
            stack: 2 * k,
            x: x.clone(),
            y: Coord::Exact(s.clone()),
            sign,
        });
        if let Some(r) = roots.get(k) {
            out.push(CADCell {
                dim: 0,
                column,
                stack: 2 * k + 1,
                x: x.clone(),
                y: match &r.exact {
                    Some(e) => Coord::Exact(e.clone()),
                    None => Coord::Between(r.lo.clone(), r.hi.clone()),
                },
                sign: 0,
            });
        }
    }
}

pub fn cad_plane(f: &Polynomial) -> Result<CADComplex> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let bf = to_bipoly(f)?;
    cad_bipoly(&bf)
}

pub fn cad_bipoly(bf: &BiPoly) -> Result<CADComplex> {
    if bf.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let proj = projection(bf);
    let critical = isolate_roots(&proj);
    let ivs: Vec<_> = critical
        .iter()
        .map(|r| (r.lo.clone(), r.hi.clone()))
        .collect();
    let samples = gap_samples(&ivs);
    let mut cells = Vec::new();
    for (k, s) in samples.iter().enumerate() {
        open_stack(bf, s, 2 * k, &mut cells);
        if let Some(r) = critical.get(k) {
            let mut alpha = RealAlg::new(r.clone());
            critical_stack(bf, &mut alpha, 2 * k + 1, &mut cells);
        }
    }
    Ok(CADComplex {
        projection: proj,
        critical,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let p = |c: &[i64]| UPoly::from_ints(c);
        let m = vec![vec![p(&[1, 1]), p(&[2])], vec![p(&[0, 1]), p(&[3, 0, 1])]];
        // (1+x)(3+x^2) - 2x
        assert_eq!(det_bareiss(m), p(&[3, 1, 1, 1]));
    }

    #[test]
    fn gap_samples_prefer_simple_points() {
        let r = |n: i64| Rational::from_integer(n.into());
        let s = gap_samples(&[(r(-1), r(-1)), (r(1), r(2))]);
        assert_eq!(s, vec![r(-2), r(0), r(3)]);
    }
}
