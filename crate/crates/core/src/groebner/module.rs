//! Submodules of graded free modules: Gröbner bases, normal forms, Hilbert
//! data of quotients, and syzygies.

use num_traits::Zero;

use super::buchberger::{divide, groebner_basis, normal_form_vec, GbOptions};
use super::hilbert::HilbertData;
use super::modvec::{ModVec, Space};
use super::order::{ModuleOrder, MonoOrder};
use crate::error::Result;
use crate::linalg;
use crate::polyarith::{monomials_of_degree, Monomial, Polynomial, Ring};

/// A column vector of a free module, one polynomial per component.
pub type Column = Vec<Polynomial>;

/// Gröbner basis of a submodule `N` of `F = ⊕ P(-shifts[c])` under
/// term-over-position grevlex.
#[derive(Clone, Debug)]
pub struct ModuleGb {
    pub space: Space,
    pub basis: Vec<ModVec>,
    /// Expression of each basis element in the input generators, if tracked.
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
}

/// `shifts[c]` is the degree of the `c`-th basis vector of the free module.
pub fn graded_space(ring: &Ring, shifts: &[i64]) -> Space {
    Space::new(
        ring,
        ModuleOrder::Top {
            mono: MonoOrder::Grevlex,
            shifts: shifts.to_vec(),
        },
        shifts.len(),
    )
}

impl ModuleGb {
    pub fn new(ring: &Ring, shifts: &[i64], gens: &[Column]) -> Result<Self> {
        Self::with_options(ring, shifts, gens, &GbOptions::default())
    }

    pub fn with_options(
        ring: &Ring,
        shifts: &[i64],
        gens: &[Column],
        opts: &GbOptions,
    ) -> Result<Self> {
        let space = graded_space(ring, shifts);
        Self::in_space(space, gens, opts)
    }

    pub fn in_space(space: Space, gens: &[Column], opts: &GbOptions) -> Result<Self> {
        let vecs: Vec<ModVec> = gens.iter().map(|g| space.from_polys(g)).collect();
        let r = groebner_basis(&space, &vecs, opts)?;
        Ok(ModuleGb {
            space,
            basis: r.basis,
            cofactors: r.cofactors,
        })
    }

    pub fn rank(&self) -> usize {
        self.space.rank
    }

    pub fn shifts(&self) -> Vec<i64> {
        let w = self.space.ring.weights();
        (0..self.space.rank)
            .map(|c| self.space.order.shift(c as u32, w))
            .collect()
    }

    pub fn columns(&self) -> Vec<Column> {
        self.basis.iter().map(|v| self.space.to_polys(v)).collect()
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Column {
        let mv = self.space.from_polys(v);
        self.space
            .to_polys(&normal_form_vec(&self.space, &mv, &self.basis))
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        let mv = self.space.from_polys(v);
        normal_form_vec(&self.space, &mv, &self.basis).is_zero()
    }

    /// Quotients `q` with `v = sum q_k basis_k + r`.
    pub fn divide(&self, v: &[Polynomial]) -> (Vec<Polynomial>, Column) {
        let mv = self.space.from_polys(v);
        let (q, r) = divide(&self.space, &mv, &self.basis);
        (q, self.space.to_polys(&r))
    }

    pub fn leading_terms(&self) -> Vec<(Monomial, u32)> {
        self.basis
            .iter()
            .map(|v| (v.terms[0].mon.clone(), v.terms[0].comp))
            .collect()
    }

    pub fn is_standard(&self, m: &Monomial, comp: u32) -> bool {
        !self
            .basis
            .iter()
            .any(|g| g.terms[0].comp == comp && g.terms[0].mon.divides(m))
    }

    /// Standard monomials `m e_c` of total degree `d` (shift included).
    pub fn standard_terms(&self, d: i64) -> Vec<(Monomial, u32)> {
        let w = self.space.ring.weights();
        let mut out = Vec::new();
        for (c, s) in self.shifts().into_iter().enumerate() {
            for m in monomials_of_degree(w, d - s) {
                if self.is_standard(&m, c as u32) {
                    out.push((m, c as u32));
                }
            }
        }
        out
    }

    /// Hilbert function of `F / N` on `[lo, hi]`.
    pub fn quotient_hilbert(&self, lo: i64, hi: i64) -> HilbertData {
        let vals = (lo..=hi).map(|d| self.standard_terms(d).len()).collect();
        HilbertData::new(lo, vals, false)
    }

    /// Hilbert function of `N` itself on `[lo, hi]`.
    pub fn submodule_hilbert(&self, lo: i64, hi: i64) -> HilbertData {
        let w = self.space.ring.weights();
        let shifts = self.shifts();
        let vals = (lo..=hi)
            .map(|d| {
                let total: usize = shifts
                    .iter()
                    .map(|s| monomials_of_degree(w, d - s).len())
                    .sum();
                total - self.standard_terms(d).len()
            })
            .collect();
        HilbertData::new(lo, vals, false)
    }
}

/// Graded syzygy module of a list of columns.
#[derive(Clone, Debug)]
pub struct SyzygyModule {
    /// Degrees of the input columns, i.e. the shifts of the free module the
    /// syzygies live in.
    pub degrees: Vec<i64>,
    /// Minimal homogeneous generators (each of length `degrees.len()`).
    pub generators: Vec<Column>,
}

/// Degree of a homogeneous column in a graded free module; `None` if zero.
pub fn column_degree(shifts: &[i64], col: &[Polynomial]) -> Option<i64> {
    col.iter()
        .zip(shifts)
        .find(|(p, _)| !p.is_zero())
        .map(|(p, s)| p.degree().unwrap() + s)
}

/// Whether every entry of the column is homogeneous of the degree forced by
/// the shifts.
pub fn column_is_homogeneous(shifts: &[i64], col: &[Polynomial]) -> bool {
    let mut deg = None;
    for (p, s) in col.iter().zip(shifts) {
        if p.is_zero() {
            continue;
        }
        if !p.is_homogeneous() {
            return false;
        }
        let d = p.degree().unwrap() + s;
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return false,
            _ => {}
        }
    }
    true
}

/// Syzygies of homogeneous columns `gens` in `⊕ P(-shifts)`.
pub fn syzygies(ring: &Ring, shifts: &[i64], gens: &[Column]) -> Result<SyzygyModule> {
    let degrees: Vec<i64> = gens
        .iter()
        .map(|g| column_degree(shifts, g).unwrap_or(0))
        .collect();
    let m = gens.len();
    let opts = GbOptions {
        track: true,
        degree_cap: None,
    };
    let gb = ModuleGb::with_options(ring, shifts, gens, &opts)?;
    let cof = gb.cofactors.clone().unwrap();
    let space = &gb.space;
    let mut cands: Vec<Column> = Vec::new();

    // S-pair syzygies of the basis, pulled back to the generators.
    let nb = gb.basis.len();
    for i in 0..nb {
        for j in i + 1..nb {
            let (li, lj) = (&gb.basis[i].terms[0], &gb.basis[j].terms[0]);
            if li.comp != lj.comp {
                continue;
            }
            let lcm = li.mon.lcm(&lj.mon);
            let mi = li.mon.quotient_of(&lcm).unwrap();
            let mj = lj.mon.quotient_of(&lcm).unwrap();
            let a = space.mul_term(&gb.basis[i], &mi, &li.coef.recip());
            let b = space.mul_term(&gb.basis[j], &mj, &lj.coef.recip());
            let s = space.sub(&a, &b);
            let (q, r) = divide(space, &s, &gb.basis);
            debug_assert!(r.is_zero());
            let mut coeff: Vec<Polynomial> = q.into_iter().map(|p| -p).collect();
            coeff[i] = &coeff[i] + &Polynomial::monomial(ring, mi, li.coef.recip());
            coeff[j] = &coeff[j] - &Polynomial::monomial(ring, mj, lj.coef.recip());
            cands.push(pull_back(ring, &coeff, &cof, m));
        }
    }
    // Each generator minus its expression through the basis.
    for l in 0..m {
        let v = space.from_polys(&gens[l]);
        let (q, _) = divide(space, &v, &gb.basis);
        let mut col = pull_back(ring, &q, &cof, m);
        for p in col.iter_mut() {
            *p = -&*p;
        }
        col[l] = &col[l] + &Polynomial::one(ring);
        cands.push(col);
    }
    let generators = minimal_generators(ring, &degrees, cands)?;
    Ok(SyzygyModule {
        degrees,
        generators,
    })
}

fn pull_back(ring: &Ring, coeff: &[Polynomial], cof: &[Vec<Polynomial>], m: usize) -> Column {
    let mut out = vec![Polynomial::zero(ring); m];
    for (k, c) in coeff.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (l, e) in cof[k].iter().enumerate() {
            if !e.is_zero() {
                out[l] = &out[l] + &(c * e);
            }
        }
    }
    out
}

/// Splits a column into homogeneous components.
fn homogeneous_parts(shifts: &[i64], col: &Column) -> Vec<(i64, Column)> {
    let mut degs: Vec<i64> = Vec::new();
    for (p, s) in col.iter().zip(shifts) {
        for (m, _) in p.terms() {
            let d = m.degree(p.ring().weights()) + s;
            if !degs.contains(&d) {
                degs.push(d);
            }
        }
    }
    degs.sort();
    degs.into_iter()
        .map(|d| {
            (
                d,
                col.iter()
                    .zip(shifts)
                    .map(|(p, s)| p.homogeneous_part(d - s))
                    .collect(),
            )
        })
        .collect()
}

/// Minimal homogeneous generators of the submodule spanned by `cands` in
/// `⊕ P(-shifts)`, chosen degree by degree.
pub fn minimal_generators(ring: &Ring, shifts: &[i64], cands: Vec<Column>) -> Result<Vec<Column>> {
    let mut by_degree: Vec<(i64, Column)> = Vec::new();
    for c in &cands {
        by_degree.extend(homogeneous_parts(shifts, c));
    }
    by_degree.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<Column> = Vec::new();
    let mut i = 0;
    while i < by_degree.len() {
        let d = by_degree[i].0;
        let mut j = i;
        while j < by_degree.len() && by_degree[j].0 == d {
            j += 1;
        }
        let gb = if kept.is_empty() {
            None
        } else {
            Some(ModuleGb::new(ring, shifts, &kept)?)
        };
        // Coordinates of normal forms in the monomial basis of F_d.
        let mut coords: Vec<Vec<crate::polyarith::Rational>> = Vec::new();
        let mut index: Vec<(Monomial, usize)> = Vec::new();
        let mut nfs: Vec<Column> = Vec::new();
        for (_, col) in &by_degree[i..j] {
            let nf = match &gb {
                Some(g) => g.normal_form(col),
                None => col.clone(),
            };
            nfs.push(nf);
        }
        for nf in &nfs {
            for (c, p) in nf.iter().enumerate() {
                for (m, _) in p.terms() {
                    if !index.iter().any(|(mm, cc)| mm == m && *cc == c) {
                        index.push((m.clone(), c));
                    }
                }
            }
        }
        for nf in &nfs {
            let mut row = vec![crate::polyarith::Rational::zero(); index.len()];
            for (c, p) in nf.iter().enumerate() {
                for (m, k) in p.terms() {
                    let pos = index
                        .iter()
                        .position(|(mm, cc)| mm == m && *cc == c)
                        .unwrap();
                    row[pos] = k.clone();
                }
            }
            coords.push(row);
        }
        // Greedy independent subset, in input order.
        let mut span = linalg::Subspace::zero(index.len());
        for (k, row) in coords.iter().enumerate() {
            if linalg::is_zero_row(row) || span.contains(row) {
                continue;
            }
            let mut rows = span.rows.clone();
            rows.push(row.clone());
            span = linalg::Subspace::span(&rows, index.len());
            kept.push(by_degree[i + k].1.clone());
        }
        i = j;
    }
    Ok(kept)
}
