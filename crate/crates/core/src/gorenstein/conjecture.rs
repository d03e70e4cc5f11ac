//! Diagnostics for the multiplication-map description of the pairing.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::module::{coordinates_in, subquotient_basis, BasisElement, JacobianModule};
use crate::error::Result;
use crate::groebner::{HilbertData, Ideal};
use crate::linalg::{self, Row};
use crate::polyarith::{jacobian_det, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    /// Hilbert data of `I^2/IJ` on the inspected window.
    pub hilbert_i2_ij: HilbertData,
    /// `(degree, dim)` of the socle of `I^2/IJ`, nonzero degrees only.
    pub socle: Vec<(i64, usize)>,
    pub socle_one_dimensional: bool,
    pub hessian_degree: Option<i64>,
    pub hessian_in_i2: bool,
    pub hessian_in_ij: bool,
    pub hessian_in_socle: bool,
    pub dim_m: usize,
    pub dim_i2_ij: usize,
    /// Part 1: the given Gram matrix factors through `I^2/IJ`.
    pub factors: Option<bool>,
    /// Part 2: one-dimensional socle.
    pub part2: bool,
    /// Part 3: the socle is spanned by the Jacobian determinant.
    pub part3: bool,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.part2 && self.part3 && self.factors != Some(false)
    }

    pub fn evidence(&self) -> String {
        let socle: Vec<String> = self
            .socle
            .iter()
            .map(|(d, k)| format!("{k} in degree {d}"))
            .collect();
        format!(
            "I^2/IJ has Poincare series {}; socle {}; Jacobian determinant in degree {}{}",
            self.hilbert_i2_ij,
            if socle.is_empty() {
                "zero".to_string()
            } else {
                socle.join(", ")
            },
            self.hessian_degree
                .map_or("-".to_string(), |d| d.to_string()),
            if self.hessian_in_socle {
                " spans it".to_string()
            } else if self.hessian_in_ij || !self.hessian_in_i2 {
                " is zero in I^2/IJ".to_string()
            } else {
                " is outside the socle".to_string()
            }
        )
    }
}

/// Kernel of multiplication by all variables on `(big/small)_d`, as
/// coordinate vectors in `subquotient_basis(big, small, d)`.
pub fn socle_piece(big: &Ideal, small: &Ideal, d: i64) -> (Vec<BasisElement>, Vec<Row>) {
    let ring = big.ring();
    let basis = subquotient_basis(big, small, d);
    if basis.is_empty() {
        return (basis, Vec::new());
    }
    let mut rows: Vec<Row> = Vec::new();
    for i in 0..ring.nvars() {
        let up = subquotient_basis(big, small, d + ring.weight(i) as i64);
        if up.is_empty() {
            continue;
        }
        let x = Polynomial::var(ring, i);
        let images: Vec<Row> = basis
            .iter()
            .map(|b| coordinates_in(small, &up, &(&b.rep * &x)))
            .collect();
        rows.extend(linalg::transpose(&images, up.len()));
    }
    let ker = if rows.is_empty() {
        (0..basis.len())
            .map(|k| {
                let mut v = vec![Rational::zero(); basis.len()];
                v[k] = num_traits::One::one();
                v
            })
            .collect()
    } else {
        linalg::kernel(&rows, basis.len())
    };
    (basis, ker)
}

/// Checks the description of the pairing through `I^2/IJ` and, if a Gram
/// matrix on the basis of `M` is given, whether it factors through it.
pub fn conjecture_check(m: &JacobianModule, gram: Option<&[Row]>) -> Result<ConjectureReport> {
    let s = m.socle_degree;
    let i2 = m.i.product(&m.i);
    let ij = m.i.product(&m.j);
    let top =
        m.i.gens()
            .iter()
            .filter_map(|g| g.degree())
            .max()
            .unwrap_or(0)
            + s;
    let mut values = Vec::new();
    let mut socle = Vec::new();
    let mut socle_total = 0;
    let mut socle_s = Vec::new();
    let mut basis_s = Vec::new();
    for d in 0..=top.max(s) {
        let (basis, ker) = socle_piece(&i2, &ij, d);
        values.push(basis.len());
        if !ker.is_empty() {
            socle.push((d, ker.len()));
            socle_total += ker.len();
        }
        if d == s {
            socle_s = ker;
            basis_s = basis;
        }
    }
    let hilbert = HilbertData::new(0, values, false);
    let h = jacobian_det(&m.fs)?;
    let hessian_degree = h.degree();
    let hessian_in_i2 = !h.is_zero() && i2.contains(&h);
    let hessian_in_ij = h.is_zero() || ij.contains(&h);
    let mut hessian_in_socle = false;
    if hessian_in_i2 && !hessian_in_ij && hessian_degree == Some(s) {
        let eta = coordinates_in(&ij, &basis_s, &h);
        hessian_in_socle = linalg::Subspace::span(&socle_s, basis_s.len()).contains(&eta);
    }
    let socle_one_dimensional = socle_total == 1;
    let factors = gram.map(|g| factors_through(m, &ij, &basis_s, g));
    Ok(ConjectureReport {
        hilbert_i2_ij: hilbert.clone(),
        socle,
        socle_one_dimensional,
        hessian_degree,
        hessian_in_i2,
        hessian_in_ij,
        hessian_in_socle,
        dim_m: m.dim(),
        dim_i2_ij: hilbert.total(),
        factors,
        part2: socle_one_dimensional,
        part3: socle_one_dimensional && hessian_in_socle,
    })
}

/// Is there a functional `λ` on `(I^2/IJ)_s` with `λ(ab) = B(a, b)`?
fn factors_through(m: &JacobianModule, ij: &Ideal, top: &[BasisElement], gram: &[Row]) -> bool {
    let mut a_rows: Vec<Row> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for a in 0..m.dim() {
        for b in a..m.dim() {
            if m.basis[a].degree + m.basis[b].degree != m.socle_degree {
                if !gram[a][b].is_zero() {
                    return false;
                }
                continue;
            }
            a_rows.push(coordinates_in(
                ij,
                top,
                &(&m.basis[a].rep * &m.basis[b].rep),
            ));
            rhs.push(gram[a][b].clone());
        }
    }
    if a_rows.is_empty() {
        return true;
    }
    let aug: Vec<Row> = a_rows
        .iter()
        .zip(&rhs)
        .map(|(r, c)| {
            let mut r = r.clone();
            r.push(c.clone());
            r
        })
        .collect();
    linalg::rank(&a_rows) == linalg::rank(&aug)
}
