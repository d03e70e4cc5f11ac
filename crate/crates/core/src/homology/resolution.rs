//! Free resolutions by iterated Schreyer syzygies, and minimization.

use std::sync::Arc;

use super::complex::{is_unit_entry, FreeComplex};
use super::matrix::Matrix;
use super::presentation::GradedModulePresentation;
use crate::error::{Error, Result};
use crate::groebner::{divide, ModVec, ModuleGb, ModuleOrder, Space};
use crate::polyarith::{Polynomial, Rational};

/// Schreyer resolution of a presented module, not minimized.
///
/// At each step the current Gröbner basis is sorted by decreasing exponent of
/// the next variable, so the leading terms of the `k`-th syzygies avoid the
/// first `k` variables and the construction stops after at most `n + 1` steps.
pub fn schreyer_resolution(m: &GradedModulePresentation) -> Result<FreeComplex> {
    let ring = &m.ring;
    let n = ring.nvars();
    let mut degrees = vec![m.gen_degrees.clone()];
    let mut maps: Vec<Matrix> = Vec::new();
    if m.gen_degrees.is_empty() {
        return FreeComplex::new(ring, degrees, maps);
    }
    let gb = ModuleGb::new(ring, &m.gen_degrees, &m.relations)?;
    let mut space: Space = gb.space.clone();
    let mut g: Vec<ModVec> = gb.basis;
    let mut level = 0usize;
    while !g.is_empty() {
        if level < n {
            g.sort_by_key(|v| std::cmp::Reverse(v.terms[0].mon.exp(level)));
        }
        let rank = space.rank;
        maps.push(Matrix::from_columns(
            ring,
            rank,
            &g.iter().map(|v| space.to_polys(v)).collect::<Vec<_>>(),
        ));
        degrees.push(g.iter().map(|v| space.lead_degree(v).unwrap()).collect());
        let leads: Vec<_> = g
            .iter()
            .map(|v| (v.terms[0].mon.clone(), v.terms[0].comp))
            .collect();
        let next = Space::new(
            ring,
            ModuleOrder::Schreyer {
                base: Arc::new(space.order.clone()),
                leads: Arc::new(leads),
            },
            g.len(),
        );
        let mut syz: Vec<ModVec> = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let (li, lj) = (&g[i].terms[0], &g[j].terms[0]);
                if li.comp != lj.comp {
                    continue;
                }
                let lcm = li.mon.lcm(&lj.mon);
                let mi = li.mon.quotient_of(&lcm).unwrap();
                let mj = lj.mon.quotient_of(&lcm).unwrap();
                let (ci, cj) = (li.coef.recip(), lj.coef.recip());
                let s = space.sub(
                    &space.mul_term(&g[i], &mi, &ci),
                    &space.mul_term(&g[j], &mj, &cj),
                );
                let (q, r) = divide(&space, &s, &g);
                if !r.is_zero() {
                    return Err(Error::Internal(
                        "Schreyer pair did not reduce to zero".into(),
                    ));
                }
                let mut coeff: Vec<Polynomial> = q.into_iter().map(|p| -p).collect();
                coeff[i] = &coeff[i] + &Polynomial::monomial(ring, mi, ci);
                coeff[j] = &coeff[j] - &Polynomial::monomial(ring, mj, cj);
                syz.push(next.from_polys(&coeff));
            }
        }
        // Keep only syzygies whose leading terms are minimal.
        let keep: Vec<bool> = (0..syz.len())
            .map(|a| {
                let ta = &syz[a].terms[0];
                !(0..syz.len()).any(|b| {
                    let tb = &syz[b].terms[0];
                    b != a
                        && tb.comp == ta.comp
                        && tb.mon.divides(&ta.mon)
                        && (tb.mon != ta.mon || b < a)
                })
            })
            .collect();
        g = syz
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(v, _)| v)
            .collect();
        space = next;
        level += 1;
    }
    FreeComplex::new(ring, degrees, maps)
}

/// Splits off pairs of basis vectors joined by a nonzero constant entry until
/// none remain.
pub fn minimize(c: &FreeComplex) -> FreeComplex {
    let ring = c.ring.clone();
    let mut degrees = c.degrees.clone();
    let mut maps = c.maps.clone();
    'outer: loop {
        for p in 0..maps.len() {
            let m = &maps[p];
            let found = (0..m.rows)
                .flat_map(|i| (0..m.cols).map(move |j| (i, j)))
                .find(|&(i, j)| is_unit_entry(&m.entries[i][j]));
            let Some((i, j)) = found else { continue };
            let cinv: Rational = m.entries[i][j].constant_value().unwrap().recip();
            // d_p with row i and column j eliminated.
            let mut new = Matrix::zero(&ring, m.rows - 1, m.cols - 1);
            for (ri, r) in (0..m.rows).filter(|&r| r != i).enumerate() {
                for (si, s) in (0..m.cols).filter(|&s| s != j).enumerate() {
                    let a = &m.entries[r][j];
                    let b = &m.entries[i][s];
                    let mut e = m.entries[r][s].clone();
                    if !a.is_zero() && !b.is_zero() {
                        e = &e - &(a * b).scale(&cinv);
                    }
                    new.entries[ri][si] = e;
                }
            }
            maps[p] = new;
            // d_{p-1} loses column i, d_{p+1} loses row j.
            if p > 0 {
                let prev = &maps[p - 1];
                let mut q = Matrix::zero(&ring, prev.rows, prev.cols - 1);
                for r in 0..prev.rows {
                    for (si, s) in (0..prev.cols).filter(|&s| s != i).enumerate() {
                        q.entries[r][si] = prev.entries[r][s].clone();
                    }
                }
                maps[p - 1] = q;
            }
            if p + 1 < maps.len() {
                let nx = &maps[p + 1];
                let mut q = Matrix::zero(&ring, nx.rows - 1, nx.cols);
                for (ri, r) in (0..nx.rows).filter(|&r| r != j).enumerate() {
                    q.entries[ri] = nx.entries[r].clone();
                }
                maps[p + 1] = q;
            }
            degrees[p].remove(i);
            degrees[p + 1].remove(j);
            continue 'outer;
        }
        break;
    }
    FreeComplex {
        ring,
        degrees,
        maps,
    }
    .trimmed()
}

/// Minimal graded free resolution of `m`. Fails if it is longer than
/// `max_length`.
pub fn free_resolution(m: &GradedModulePresentation, max_length: usize) -> Result<FreeComplex> {
    let c = minimize(&schreyer_resolution(m)?);
    if c.length() > max_length {
        return Err(Error::InvalidArgument(format!(
            "resolution has length {} > {max_length}",
            c.length()
        )));
    }
    Ok(c)
}
