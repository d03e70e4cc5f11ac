//! The zero-dimensional bilinear form and the real-branch count.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::Row;
use crate::polyarith::{jacobian_det, Monomial, Polynomial, Rational, Ring};
use crate::quadform::{signature_exact, Inertia};

/// `B(a, b) = φ(ab)` on `Q = P/(f)` with `φ` the coordinate functional of
/// the leading standard monomial of `h = jac(f)`, scaled so `φ(h) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ELForm {
    pub ring: Ring,
    pub basis: Vec<Monomial>,
    pub h: Polynomial,
    /// Normal form of `h`.
    pub h_nf: Polynomial,
    pub socle_monomial: Monomial,
    pub gram: Vec<Row>,
    pub inertia: Inertia,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ELSummary {
    pub dim: usize,
    pub basis: Vec<String>,
    pub h: String,
    pub gram: Vec<Vec<String>>,
    pub signature: i64,
}

impl ELForm {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn signature(&self) -> i64 {
        self.inertia.signature()
    }

    pub fn summary(&self) -> ELSummary {
        let mono = |m: &Monomial| {
            Polynomial::monomial(&self.ring, m.clone(), Rational::from_integer(1.into()))
                .to_string()
        };
        ELSummary {
            dim: self.dim(),
            basis: self.basis.iter().map(mono).collect(),
            h: self.h.to_string(),
            gram: self
                .gram
                .iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect())
                .collect(),
            signature: self.signature(),
        }
    }
}

pub fn ev_levine(fs: &[Polynomial]) -> Result<ELForm> {
    let ring = fs
        .first()
        .map(|f| f.ring().clone())
        .ok_or_else(|| Error::InvalidArgument("empty sequence".into()))?;
    if fs.len() != ring.nvars() {
        return Err(Error::LengthMismatch {
            expected: ring.nvars(),
            got: fs.len(),
        });
    }
    let ideal = Ideal::new(&ring, fs.to_vec());
    if ideal.is_unit() {
        return Err(Error::NotZeroDimensional(
            "the sequence has no common zero".into(),
        ));
    }
    if ideal.krull_dimension() != 0 {
        return Err(Error::NotZeroDimensional(format!(
            "the zero locus has dimension {}",
            ideal.krull_dimension()
        )));
    }
    let basis = ideal.standard_monomials();
    // Every variable must be nilpotent, so the only zero is the origin.
    let power = basis.len() as u32 + 1;
    for i in 0..ring.nvars() {
        if !ideal.radical_contains(&Polynomial::var(&ring, i), power) {
            return Err(Error::NotZeroDimensional(format!(
                "the sequence has zeros away from the origin ({} is not nilpotent)",
                ring.names()[i]
            )));
        }
    }
    let h = jacobian_det(fs)?;
    let h_nf = ideal.normal_form(&h);
    let (mu, c) = h_nf
        .leading_term()
        .cloned()
        .ok_or_else(|| Error::Internal("Jacobian determinant lies in the ideal".into()))?;
    let n = basis.len();
    let mut gram = vec![vec![Rational::zero(); n]; n];
    for a in 0..n {
        for b in a..n {
            let prod = Polynomial::monomial(
                &ring,
                basis[a].mul(&basis[b]),
                Rational::from_integer(1.into()),
            );
            let v = ideal.normal_form(&prod).coefficient(&mu) / &c;
            gram[a][b] = v.clone();
            gram[b][a] = v;
        }
    }
    let inertia = signature_exact(&gram)?;
    Ok(ELForm {
        ring,
        basis,
        h,
        h_nf,
        socle_monomial: mu,
        gram,
        inertia,
    })
}

/// Number of real half-branches at the origin of the curve `fs = 0`
/// (`n - 1` equations in `n` variables), via the form of `(fs, Jac(g))` with
/// `g = Σ x_i^2`.
pub fn real_branches(fs: &[Polynomial]) -> Result<i64> {
    let ring = fs
        .first()
        .map(|f| f.ring().clone())
        .ok_or_else(|| Error::InvalidArgument("empty sequence".into()))?;
    let n = ring.nvars();
    if fs.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n - 1,
            got: fs.len(),
        });
    }
    let mut g = Polynomial::zero(&ring);
    for i in 0..n {
        let x = Polynomial::var(&ring, i);
        g = &g + &(&x * &x);
    }
    let mut aug = fs.to_vec();
    aug.push(g);
    let jac = jacobian_det(&aug)?;
    let mut seq = fs.to_vec();
    seq.push(jac);
    let form = ev_levine(&seq).map_err(|e| match e {
        Error::NotZeroDimensional(msg) => {
            Error::NotZeroDimensional(format!("degenerate Jacobian: {msg}"))
        }
        e => e,
    })?;
    Ok(2 * form.signature())
}
