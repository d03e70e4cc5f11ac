//! Degree-by-degree dense linear algebra, independent of the Gröbner engine.
//!
//! Every graded piece is a subspace of `Q^{monomials of degree d}`; ranks use
//! fraction-free elimination. The saturation `J : m^∞` is approached through
//! `L^0_d = J_d`, `L^k_d = { v : x_i v ∈ L^{k-1}_{d+w_i} for all i }`, which is
//! only computable while `d + k w_max <= D`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::hilbert::HilbertData;
use crate::error::{Error, Result};
use crate::linalg::{self, Row, Subspace};
use crate::polyarith::{monomials_of_degree, Monomial, Polynomial, Rational, Ring};

/// Which parts of the oracle to run.
#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub saturation: bool,
    pub koszul: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            saturation: true,
            koszul: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub bound: i64,
    /// `dim (P/J)_d` for `0 <= d <= D`.
    pub quotient: HilbertData,
    /// `dim I_d` for the truncated saturation.
    pub saturation_dims: HilbertData,
    /// `dim (I/J)_d`.
    pub module: HilbertData,
    /// `stable[d]`: the last two computable iterates agree in degree `d`.
    pub stable: Vec<bool>,
    /// Iterates that were computable in degree `d`.
    pub depth: Vec<usize>,
    /// Spans of `I_d` in the monomial basis [`OracleReport::monomials`].
    pub saturation: Vec<Subspace>,
    pub monomials: Vec<Vec<Monomial>>,
    /// `dim H_k(f)_d` for `k = 0..=n` (empty when not requested).
    pub koszul: Vec<HilbertData>,
}

impl OracleReport {
    /// Fails if any degree in `[lo, hi]` did not stabilise.
    pub fn require_stable(&self, lo: i64, hi: i64) -> Result<()> {
        for d in lo.max(0)..=hi.min(self.bound) {
            if !self.stable[d as usize] {
                return Err(Error::WindowTooSmall(format!(
                    "saturation not stable in degree {d} with bound {}",
                    self.bound
                )));
            }
        }
        Ok(())
    }

    /// Coordinates of a homogeneous polynomial of degree `d`.
    pub fn coords(&self, p: &Polynomial, d: i64) -> Row {
        coords_in(&self.monomials[d as usize], p)
    }
}

fn coords_in(basis: &[Monomial], p: &Polynomial) -> Row {
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut row = vec![Rational::zero(); basis.len()];
    for (m, c) in p.terms() {
        row[index[m]] = c.clone();
    }
    row
}

/// Default window `Σ deg f_i − Σ w_i + 2`.
pub fn default_bound(ring: &Ring, gens: &[Polynomial]) -> i64 {
    let s: i64 = gens.iter().map(|g| g.degree().unwrap_or(0)).sum();
    s - ring.weight_sum() + 2
}

/// Runs the oracle for the homogeneous generators `gens` up to degree `bound`.
pub fn degreewise_oracle(
    ring: &Ring,
    gens: &[Polynomial],
    bound: i64,
    opts: OracleOptions,
) -> Result<OracleReport> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let maxdeg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    if bound < maxdeg {
        return Err(Error::WindowTooSmall(format!(
            "bound {bound} below the largest generator degree {maxdeg}"
        )));
    }
    let w = ring.weights();
    let n = ring.nvars();
    let wmax = *w.iter().max().unwrap_or(&1) as i64;
    let top = bound as usize;
    let monomials: Vec<Vec<Monomial>> = (0..=bound).map(|d| monomials_of_degree(w, d)).collect();

    // J_d spans and Bareiss ranks.
    let mut jd: Vec<Subspace> = Vec::with_capacity(top + 1);
    let mut quotient = Vec::with_capacity(top + 1);
    for d in 0..=bound {
        let basis = &monomials[d as usize];
        let mut rows: Vec<Row> = Vec::new();
        for g in gens {
            let e = d - g.degree().unwrap_or(0);
            if e < 0 || g.is_zero() {
                continue;
            }
            for m in &monomials[e as usize] {
                rows.push(coords_in(basis, &g.mul_term(m, &Rational::one())));
            }
        }
        let r = linalg::rank(&rows);
        quotient.push(basis.len() - r);
        let sp = Subspace::span(&rows, basis.len());
        debug_assert_eq!(sp.dim(), r);
        jd.push(sp);
    }

    let mut saturation = jd.clone();
    let mut stable = vec![true; top + 1];
    let mut depth = vec![0usize; top + 1];
    if opts.saturation {
        // levels[k][d] for d + k*wmax <= bound
        let mut prev: Vec<Subspace> = jd.clone();
        let mut k = 1;
        loop {
            let reach = bound - k as i64 * wmax;
            if reach < 0 {
                break;
            }
            let mut cur: Vec<Subspace> = Vec::new();
            for d in 0..=reach {
                let basis = &monomials[d as usize];
                // v -> (x_i v mod L^{k-1}_{d+w_i})_i
                let mut blocks: Vec<Vec<Row>> = Vec::new();
                for i in 0..n {
                    let target_deg = (d + w[i] as i64) as usize;
                    let tb = &monomials[target_deg];
                    let l = &prev[target_deg];
                    let images: Vec<Row> = basis
                        .iter()
                        .map(|m| {
                            let mut e = m.exponents().to_vec();
                            e[i] += 1;
                            let xm = Monomial::from_exponents(&e);
                            let mut v = vec![Rational::zero(); tb.len()];
                            let pos = tb.iter().position(|t| *t == xm).unwrap();
                            v[pos] = Rational::one();
                            l.quotient_coords(&v)
                        })
                        .collect();
                    blocks.push(linalg::transpose(
                        &images,
                        images.first().map_or(0, |r| r.len()),
                    ));
                }
                let rows: Vec<Row> = blocks.into_iter().flatten().collect();
                let ker = linalg::kernel(&rows, basis.len());
                cur.push(Subspace::span(&ker, basis.len()));
            }
            for d in 0..=reach as usize {
                stable[d] = cur[d].dim() == prev[d].dim();
                depth[d] = k;
                saturation[d] = cur[d].clone();
            }
            let mut next = cur;
            // Keep higher degrees of the previous level for the next pass.
            next.extend(prev.iter().skip(reach as usize + 1).cloned());
            prev = next;
            k += 1;
        }
        // Degrees never iterated cannot be certified.
        for d in 0..=top {
            if depth[d] == 0 {
                stable[d] = false;
            }
        }
    }

    let saturation_dims: Vec<usize> = saturation.iter().map(|s| s.dim()).collect();
    let module: Vec<usize> = saturation_dims
        .iter()
        .zip(&jd)
        .map(|(a, b)| a - b.dim())
        .collect();

    let koszul = if opts.koszul {
        koszul_dims(gens, bound, &monomials)
    } else {
        Vec::new()
    };

    Ok(OracleReport {
        bound,
        quotient: HilbertData::new(0, quotient, false),
        saturation_dims: HilbertData::new(0, saturation_dims, false),
        module: HilbertData::new(0, module, false),
        stable,
        depth,
        saturation,
        monomials,
        koszul,
    })
}

fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
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
    rec(0, n, p, &mut cur, &mut out);
    out
}

/// `dim H_k(f)_d` via ranks of the Koszul differentials restricted to degree `d`.
fn koszul_dims(gens: &[Polynomial], bound: i64, monomials: &[Vec<Monomial>]) -> Vec<HilbertData> {
    let r = gens.len();
    let degs: Vec<i64> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    // Column index of K_p in degree d: (subset, monomial of degree d - deg f_I).
    let index = |p: usize, d: i64| -> Vec<(Vec<usize>, usize, i64)> {
        let mut out = Vec::new();
        for s in subsets(r, p) {
            let e = d - s.iter().map(|&i| degs[i]).sum::<i64>();
            if e >= 0 && e <= bound {
                let count = monomials[e as usize].len();
                out.push((s, count, e));
            }
        }
        out
    };
    // rank of d_p in degree d
    let rank_of = |p: usize, d: i64| -> usize {
        if p == 0 || p > r {
            return 0;
        }
        let src = index(p, d);
        let dst = index(p - 1, d);
        let mut offsets = HashMap::new();
        let mut total = 0;
        for (s, c, _) in &dst {
            offsets.insert(s.clone(), total);
            total += c;
        }
        let mut rows: Vec<Row> = Vec::new();
        for (s, _, e) in &src {
            for m in &monomials[*e as usize] {
                let mut row = vec![Rational::zero(); total];
                for (j, &ij) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(j);
                    let ed = (d - rest.iter().map(|&i| degs[i]).sum::<i64>()) as usize;
                    let off = offsets[&rest];
                    let img = gens[ij].mul_term(m, &Rational::one());
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    let basis = &monomials[ed];
                    for (mm, c) in img.terms() {
                        let pos = basis.iter().position(|t| t == mm).unwrap();
                        if sign > 0 {
                            row[off + pos] += c;
                        } else {
                            row[off + pos] -= c;
                        }
                    }
                }
                rows.push(row);
            }
        }
        linalg::rank(&rows)
    };
    let ranks: Vec<Vec<usize>> = (0..=r + 1)
        .map(|p| (0..=bound).map(|d| rank_of(p, d)).collect())
        .collect();
    let mut out = Vec::new();
    for k in 0..=r {
        let vals = (0..=bound)
            .map(|d| {
                let dim: usize = index(k, d).iter().map(|(_, c, _)| c).sum();
                dim - ranks[k][d as usize] - ranks[k + 1][d as usize]
            })
            .collect();
        out.push(HilbertData::new(0, vals, false));
    }
    out
}
