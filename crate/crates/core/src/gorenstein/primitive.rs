//! The primitive ideal `∫I = { f : f, ∂_1 f, .., ∂_n f ∈ I }` degree by
//! degree, and the extended codimension `c_{e,I}(f)`.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::{self, Row, Subspace};
use crate::polyarith::{gradient, monomials_of_degree, Monomial, Polynomial, Rational};

/// `(∫I)_d` for `d = 0..=bound`, as bases of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimitivePieces {
    pub bound: i64,
    pub pieces: Vec<Vec<Polynomial>>,
}

impl PrimitivePieces {
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Vec::len).collect()
    }

    pub fn piece(&self, d: i64) -> &[Polynomial] {
        &self.pieces[d as usize]
    }
}

fn coords(index: &HashMap<Monomial, usize>, p: &Polynomial) -> Row {
    let mut v = vec![Rational::zero(); index.len()];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}

fn from_coords(ring: &crate::polyarith::Ring, mons: &[Monomial], v: &[Rational]) -> Polynomial {
    let terms = mons
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn index_of(mons: &[Monomial]) -> HashMap<Monomial, usize> {
    mons.iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}

/// Kernel of `f ↦ (NF_I f, NF_I ∂_1 f, ..)` on each `P_d`.
pub fn primitive_ideal_truncated(i: &Ideal, bound: i64) -> Result<PrimitivePieces> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = i.ring();
    let mut pieces = Vec::new();
    for d in 0..=bound {
        let mons = monomials_of_degree(ring.weights(), d);
        // One column per monomial of P_d; rows are the coefficients of the
        // normal forms of the monomial and its partials.
        let mut cols: Vec<Vec<(usize, Polynomial)>> = Vec::with_capacity(mons.len());
        for m in &mons {
            let p = Polynomial::monomial(ring, m.clone(), Rational::one());
            let mut col = vec![(0, i.normal_form(&p))];
            for (k, dp) in gradient(&p).into_iter().enumerate() {
                col.push((k + 1, i.normal_form(&dp)));
            }
            cols.push(col);
        }
        let mut keys: HashMap<(usize, Monomial), usize> = HashMap::new();
        for col in &cols {
            for (k, p) in col {
                for (m, _) in p.terms() {
                    let next = keys.len();
                    keys.entry((*k, m.clone())).or_insert(next);
                }
            }
        }
        let mut rows: Vec<Row> = vec![vec![Rational::zero(); mons.len()]; keys.len()];
        for (j, col) in cols.iter().enumerate() {
            for (k, p) in col {
                for (m, c) in p.terms() {
                    rows[keys[&(*k, m.clone())]][j] = c.clone();
                }
            }
        }
        let ker = linalg::kernel(&rows, mons.len());
        pieces.push(ker.iter().map(|v| from_coords(ring, &mons, v)).collect());
    }
    Ok(PrimitivePieces { bound, pieces })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CeReport {
    /// `dim (∫I / ∫I ∩ J_f)_d` for `d = 0..=bound`.
    pub per_degree: Vec<usize>,
    pub value: usize,
    /// The quotient vanished in the top inspected degree.
    pub stable: bool,
}

pub fn c_e(f: &Polynomial, i: &Ideal, bound: i64) -> Result<CeReport> {
    let ring = f.ring();
    if i.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let prim = primitive_ideal_truncated(i, bound)?;
    let jf = gradient(f);
    let mut per_degree = Vec::new();
    for d in 0..=bound {
        let mons = monomials_of_degree(ring.weights(), d);
        let index = index_of(&mons);
        let a: Vec<Row> = prim.piece(d).iter().map(|p| coords(&index, p)).collect();
        let mut b: Vec<Row> = Vec::new();
        for g in jf.iter().filter(|g| !g.is_zero()) {
            let e = d - g.degree().unwrap();
            if e < 0 {
                continue;
            }
            for m in monomials_of_degree(ring.weights(), e) {
                b.push(coords(&index, &g.mul_term(&m, &Rational::one())));
            }
        }
        let sa = Subspace::span(&a, mons.len());
        let sb = Subspace::span(&b, mons.len());
        let mut both = a.clone();
        both.extend(b);
        let sum = Subspace::span(&both, mons.len()).dim();
        let meet = sa.dim() + sb.dim() - sum;
        per_degree.push(sa.dim() - meet);
    }
    let value = per_degree.iter().sum();
    let stable = per_degree.last().is_some_and(|&v| v == 0);
    Ok(CeReport {
        per_degree,
        value,
        stable,
    })
}
