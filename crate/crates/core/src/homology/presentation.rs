//! Finitely presented graded modules and homology of complexes as
//! presented modules.

use super::complex::FreeComplex;
use super::matrix::Matrix;
use crate::error::Result;
use crate::groebner::{column_degree, minimal_generators, syzygies, Column, HilbertData, ModuleGb};
use crate::polyarith::{Polynomial, Ring};

/// `coker(P^relations -> ⊕ P(-gen_degrees))`.
#[derive(Clone, Debug)]
pub struct GradedModulePresentation {
    pub ring: Ring,
    pub gen_degrees: Vec<i64>,
    /// Relation columns, each of length `gen_degrees.len()`.
    pub relations: Vec<Column>,
    /// For each generator, a representative in some ambient free module
    /// (for example a polynomial representing a class of `I/J`).
    pub lifts: Option<Vec<Column>>,
}

impl GradedModulePresentation {
    pub fn new(ring: &Ring, gen_degrees: Vec<i64>, relations: Vec<Column>) -> Self {
        GradedModulePresentation {
            ring: ring.clone(),
            gen_degrees,
            relations,
            lifts: None,
        }
    }

    /// `P / (gens)`.
    pub fn cyclic(ring: &Ring, gens: &[Polynomial]) -> Self {
        let relations = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| vec![g.clone()])
            .collect();
        let mut m = Self::new(ring, vec![0], relations);
        m.lifts = Some(vec![vec![Polynomial::one(ring)]]);
        m
    }

    /// `(I + J) / J` for ideals given by generators, with the generators of
    /// `I` as lifts.
    pub fn ideal_quotient(
        ring: &Ring,
        i_gens: &[Polynomial],
        j_gens: &[Polynomial],
    ) -> Result<Self> {
        let cols = |v: &[Polynomial]| -> Vec<Column> {
            v.iter()
                .filter(|p| !p.is_zero())
                .map(|p| vec![p.clone()])
                .collect()
        };
        subquotient(ring, &[0], &cols(i_gens), &cols(j_gens))
    }

    pub fn num_generators(&self) -> usize {
        self.gen_degrees.len()
    }

    pub fn relation_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.ring, self.gen_degrees.len(), &self.relations)
    }

    pub fn relation_gb(&self) -> Result<ModuleGb> {
        ModuleGb::new(&self.ring, &self.gen_degrees, &self.relations)
    }

    /// Hilbert function on `[lo, hi]`.
    pub fn hilbert(&self, lo: i64, hi: i64) -> Result<HilbertData> {
        if self.gen_degrees.is_empty() {
            return Ok(HilbertData::new(
                lo,
                vec![0; (hi - lo + 1).max(0) as usize],
                false,
            ));
        }
        Ok(self.relation_gb()?.quotient_hilbert(lo, hi))
    }

    pub fn is_zero(&self) -> Result<bool> {
        if self.gen_degrees.is_empty() {
            return Ok(true);
        }
        let gb = self.relation_gb()?;
        Ok((0..self.gen_degrees.len())
            .all(|c| !gb.is_standard(&crate::Monomial::one(self.ring.nvars()), c as u32)))
    }
}

/// Generators of the kernel of `m: ⊕ P(-src) -> ⊕ P(-tgt)`.
pub fn matrix_kernel(ring: &Ring, m: &Matrix, src: &[i64], tgt: &[i64]) -> Result<Vec<Column>> {
    let cols = m.columns();
    let nonzero: Vec<usize> = (0..cols.len())
        .filter(|&j| cols[j].iter().any(|p| !p.is_zero()))
        .collect();
    let mut out: Vec<Column> = Vec::new();
    for j in 0..cols.len() {
        if !nonzero.contains(&j) {
            let mut e = vec![Polynomial::zero(ring); cols.len()];
            e[j] = Polynomial::one(ring);
            out.push(e);
        }
    }
    if !nonzero.is_empty() {
        let sub: Vec<Column> = nonzero.iter().map(|&j| cols[j].clone()).collect();
        let syz = syzygies(ring, tgt, &sub)?;
        for g in syz.generators {
            let mut e = vec![Polynomial::zero(ring); cols.len()];
            for (k, &j) in nonzero.iter().enumerate() {
                e[j] = g[k].clone();
            }
            out.push(e);
        }
    }
    minimal_generators(ring, src, out)
}

/// Presentation of `(Z + B) / B` inside `⊕ P(-shifts)`, with `Z` as lifts.
pub fn subquotient(
    ring: &Ring,
    shifts: &[i64],
    z: &[Column],
    b: &[Column],
) -> Result<GradedModulePresentation> {
    let z = minimal_generators(ring, shifts, z.to_vec())?;
    let degrees: Vec<i64> = z
        .iter()
        .map(|c| column_degree(shifts, c).unwrap())
        .collect();
    let s = z.len();
    let mut all = z.clone();
    all.extend(b.iter().filter(|c| c.iter().any(|p| !p.is_zero())).cloned());
    let relations = if s == 0 {
        Vec::new()
    } else {
        let syz = syzygies(ring, shifts, &all)?;
        let projected: Vec<Column> = syz
            .generators
            .into_iter()
            .map(|g| g[..s].to_vec())
            .filter(|g| g.iter().any(|p| !p.is_zero()))
            .collect();
        minimal_generators(ring, &degrees, projected)?
    };
    Ok(GradedModulePresentation {
        ring: ring.clone(),
        gen_degrees: degrees,
        relations,
        lifts: Some(z),
    })
}

/// `H_p(C) = ker d_p / im d_{p+1}` as a presented module.
pub fn homology_at(c: &FreeComplex, p: usize) -> Result<GradedModulePresentation> {
    let ring = &c.ring;
    let Some(src) = c.degrees.get(p) else {
        return Ok(GradedModulePresentation::new(ring, Vec::new(), Vec::new()));
    };
    let z = match c.d(p) {
        Some(m) => matrix_kernel(ring, m, src, &c.degrees[p - 1])?,
        None => (0..src.len())
            .map(|j| {
                let mut e = vec![Polynomial::zero(ring); src.len()];
                e[j] = Polynomial::one(ring);
                e
            })
            .collect(),
    };
    let b = c.d(p + 1).map(|m| m.columns()).unwrap_or_default();
    subquotient(ring, src, &z, &b)
}

/// `H_k(fs)` presented, with its Hilbert data from the presentation and from
/// degreewise linear algebra.
#[derive(Clone, Debug)]
pub struct KoszulHomology {
    pub presentation: GradedModulePresentation,
    pub hilbert: HilbertData,
    pub oracle: HilbertData,
}

pub fn koszul_homology(
    ring: &Ring,
    fs: &[Polynomial],
    k: usize,
    lo: i64,
    hi: i64,
) -> Result<KoszulHomology> {
    let c = super::complex::koszul_complex(ring, fs)?;
    let presentation = homology_at(&c, k)?;
    let hilbert = presentation.hilbert(lo, hi)?;
    let oracle = c.homology_hilbert(k, lo, hi);
    Ok(KoszulHomology {
        presentation,
        hilbert,
        oracle,
    })
}
