//! Euler characteristics of the sign regions of an even-degree curve in
//! `RP^2`, and the comparison with the signature of the cone.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::cad::{cad_plane, euler_term, gap_samples};
use super::upoly::{isolate_roots, UPoly};
use crate::error::{Error, Result};
use crate::gorenstein::{ev_levine, signature, SignatureOptions};
use crate::groebner::Ideal;
use crate::polyarith::{gradient, Monomial, Polynomial, Rational, VarSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub chi_plus: i64,
    pub chi_minus: i64,
    pub chi_curve: i64,
    /// `χ_c` of `{±F > 0}` in the chart `z = 1`.
    pub affine_plus: i64,
    pub affine_minus: i64,
    /// `χ_c` of `{±F > 0}` on the line `z = 0`.
    pub infinity_plus: i64,
    pub infinity_minus: i64,
    /// Affine cells, `cells[dim][sign + 1]`.
    pub cells: [[usize; 3]; 3],
    pub line_at_infinity_on_curve: bool,
}

impl EulerReport {
    pub fn difference(&self) -> i64 {
        self.chi_plus - self.chi_minus
    }
}

/// `F(x, y, 1)` in the ring of the first two variables.
pub fn dehomogenize(f: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring();
    let names = ring.names();
    let affine = VarSet::unit(&names[..2])?;
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| (Monomial::from_exponents(&[m.exp(0), m.exp(1)]), c.clone()))
        .collect();
    Ok(Polynomial::from_terms(&affine, terms))
}

fn check_input(f: &Polynomial) -> Result<i64> {
    let ring = f.ring();
    if ring.nvars() != 3 || !ring.has_unit_weights() {
        return Err(Error::InvalidArgument(
            "expected a form in 3 variables of weight 1".into(),
        ));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let d = f.degree().unwrap_or(0);
    if d % 2 != 0 {
        return Err(Error::OddDegree(d));
    }
    Ok(d)
}

pub fn euler_rp2(f: &Polynomial) -> Result<EulerReport> {
    let d = check_input(f)?;
    let cad = cad_plane(&dehomogenize(f)?)?;
    let (affine_plus, affine_minus) = (cad.euler_c(1), cad.euler_c(-1));
    let affine_curve = cad.euler_c(0);

    // Points (1 : t : 0) and the point (0 : 1 : 0).
    let mut h = vec![Rational::zero(); d as usize + 1];
    for (m, c) in f.terms() {
        if m.exp(2) == 0 {
            h[m.exp(1) as usize] += c;
        }
    }
    let h = UPoly::from_coeffs(h);
    let mut inf = [0i64; 3];
    let line_at_infinity_on_curve = h.is_zero();
    // A line at infinity on the curve is a circle and adds nothing.
    if !line_at_infinity_on_curve {
        let roots = isolate_roots(&h);
        inf[1] += roots.len() as i64;
        let ivs: Vec<_> = roots.iter().map(|r| (r.lo.clone(), r.hi.clone())).collect();
        for s in gap_samples(&ivs) {
            inf[(h.sign_at(&s) + 1) as usize] += euler_term(1);
        }
        let top = if h.degree() == Some(d as usize) {
            super::upoly::sign(&h.lc())
        } else {
            0
        };
        inf[(top + 1) as usize] += 1;
    }
    let report = EulerReport {
        chi_plus: affine_plus + inf[2],
        chi_minus: affine_minus + inf[0],
        chi_curve: affine_curve + inf[1],
        affine_plus,
        affine_minus,
        infinity_plus: inf[2],
        infinity_minus: inf[0],
        cells: cad.counts(),
        line_at_infinity_on_curve,
    };
    if report.chi_plus + report.chi_minus + report.chi_curve != 1 {
        return Err(Error::Internal(format!(
            "Euler characteristics do not add up: {report:?}"
        )));
    }
    Ok(report)
}

/// Singularities of the curve `F = 0` in `RP^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveType {
    Smooth,
    /// Only ordinary double points (possibly with complex branches).
    Nodal,
    /// Isolated singular points of corank two or worse.
    Singular,
    /// A multiple component.
    NonReduced,
}

/// Classifies the singular locus via the Jacobian ideal and the 2x2 minors
/// of the Hessian matrix: a node is a singular point with Hessian rank two.
pub fn curve_type(f: &Polynomial) -> CurveType {
    let ring = f.ring();
    let j = gradient(f);
    let jd = Ideal::new(ring, j.clone()).krull_dimension();
    if jd <= 0 {
        return CurveType::Smooth;
    }
    if jd >= 2 {
        return CurveType::NonReduced;
    }
    let h: Vec<Vec<Polynomial>> = j.iter().map(gradient).collect();
    let n = ring.nvars();
    let mut gens = j;
    for (a, b) in pairs(n) {
        for (c, e) in pairs(n) {
            let m = &(&h[a][c] * &h[b][e]) - &(&h[a][e] * &h[b][c]);
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    if Ideal::new(ring, gens).krull_dimension() <= 0 {
        CurveType::Nodal
    } else {
        CurveType::Singular
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub sigma: i64,
    /// `hessian`, `homological` or `eisenbud-levine` for smooth curves.
    pub method: String,
    pub dim_m: Option<usize>,
    pub euler: EulerReport,
    pub curve: CurveType,
    pub holds: bool,
    pub warnings: Vec<String>,
}

/// Computes `σ` and `χ(V_+) - χ(V_-)` independently and compares them.
pub fn verify_signature_theorem(f: &Polynomial, opts: SignatureOptions) -> Result<VerifyReport> {
    let euler = euler_rp2(f)?;
    let curve = curve_type(f);
    let mut warnings = Vec::new();
    match curve {
        CurveType::Nodal | CurveType::Smooth => {}
        CurveType::Singular => {
            warnings.push("curve has singular points other than ordinary nodes".to_string())
        }
        CurveType::NonReduced => warnings.push("curve has a multiple component".to_string()),
    }
    let (sigma, method, dim_m) = if curve == CurveType::Smooth {
        let el = ev_levine(&gradient(f))?;
        (el.signature(), "eisenbud-levine".to_string(), None)
    } else {
        let r = signature(f.ring(), &gradient(f), opts)?;
        (r.signature(), r.mode().to_string(), Some(r.module.dim()))
    };
    Ok(VerifyReport {
        sigma,
        method,
        dim_m,
        holds: sigma == euler.difference(),
        euler,
        curve,
        warnings,
    })
}
