//! The Jacobian module `M = I/J` with `I = J : m^∞`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{degreewise_oracle, HilbertData, Ideal, OracleOptions};
use crate::polyarith::{gradient, monomials_of_degree, Monomial, Polynomial, Rational, Ring};

/// Options for [`jacobian_module`].
#[derive(Clone, Copy, Debug)]
pub struct ModuleOptions {
    /// Cross-check the Hilbert data against the dense oracle up to `s + 2`.
    pub oracle: bool,
}

impl Default for ModuleOptions {
    fn default() -> Self {
        ModuleOptions { oracle: true }
    }
}

/// A basis element of `M`: the class of `rep`, whose leading monomial is
/// `monomial` (a leading monomial of `I` that is standard for `J`).
#[derive(Clone, Debug, PartialEq)]
pub struct BasisElement {
    pub monomial: Monomial,
    pub degree: i64,
    pub rep: Polynomial,
}

#[derive(Clone, Debug)]
pub struct JacobianModule {
    pub ring: Ring,
    pub fs: Vec<Polynomial>,
    pub j: Ideal,
    pub i: Ideal,
    pub saturation_steps: usize,
    pub basis: Vec<BasisElement>,
    pub hilbert: HilbertData,
    pub socle_degree: i64,
    /// Whether the dense oracle confirmed the Hilbert data.
    pub oracle_checked: bool,
}

/// Summary used in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSummary {
    pub dim: usize,
    pub hilbert: String,
    pub socle_degree: i64,
    pub saturation_steps: usize,
    pub basis: Vec<String>,
}

impl JacobianModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn summary(&self) -> ModuleSummary {
        ModuleSummary {
            dim: self.dim(),
            hilbert: self.hilbert.to_string(),
            socle_degree: self.socle_degree,
            saturation_steps: self.saturation_steps,
            basis: self
                .basis
                .iter()
                .map(|b| {
                    Polynomial::monomial(&self.ring, b.monomial.clone(), Rational::one())
                        .to_string()
                })
                .collect(),
        }
    }

    /// Coordinates of the class of `p ∈ I` in the basis of `M`.
    pub fn coordinates(&self, p: &Polynomial) -> Vec<Rational> {
        coordinates_in(&self.j, &self.basis, p)
    }
}

/// Basis of `(big/small)_d` for ideals `small ⊆ big`: one element per
/// monomial that leads in `big` but is standard for `small`.
pub fn subquotient_basis(big: &Ideal, small: &Ideal, d: i64) -> Vec<BasisElement> {
    let ring = big.ring();
    let (bgb, sgb) = (big.gb(), small.gb());
    monomials_of_degree(ring.weights(), d)
        .into_iter()
        .filter(|m| !bgb.is_standard(m) && sgb.is_standard(m))
        .map(|m| {
            let mp = Polynomial::monomial(ring, m.clone(), Rational::one());
            let g = &mp - &bgb.normal_form(&mp);
            BasisElement {
                monomial: m,
                degree: d,
                rep: sgb.normal_form(&g),
            }
        })
        .collect()
}

/// Coordinates of the class of `p ∈ big` in a basis from
/// [`subquotient_basis`] (all degrees may be mixed).
pub fn coordinates_in(small: &Ideal, basis: &[BasisElement], p: &Polynomial) -> Vec<Rational> {
    let mut r = small.normal_form(p);
    let mut out = vec![Rational::zero(); basis.len()];
    // Representatives have distinct small-standard leading monomials, so
    // triangular elimination recovers the coordinates.
    while let Some((m, c)) = r.leading_term().cloned() {
        let Some(k) = basis.iter().position(|b| b.monomial == m) else {
            break;
        };
        let lc = basis[k].rep.leading_term().unwrap().1.clone();
        let q = &c / &lc;
        r = &r - &basis[k].rep.scale(&q);
        out[k] = q;
    }
    out
}

fn check_sequence(ring: &Ring, fs: &[Polynomial]) -> Result<()> {
    if fs.len() != ring.nvars() {
        return Err(Error::LengthMismatch {
            expected: ring.nvars(),
            got: fs.len(),
        });
    }
    if fs.iter().any(|f| f.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    if fs.iter().any(|f| !f.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    Ok(())
}

/// `M` for the partial derivatives of `f`.
pub fn jacobian_module_of(f: &Polynomial, opts: ModuleOptions) -> Result<JacobianModule> {
    jacobian_module(f.ring(), &gradient(f), opts)
}

/// `M = I/J` for a weighted-homogeneous sequence defining a one-dimensional
/// almost complete intersection.
pub fn jacobian_module(
    ring: &Ring,
    fs: &[Polynomial],
    opts: ModuleOptions,
) -> Result<JacobianModule> {
    check_sequence(ring, fs)?;
    let j = Ideal::new(ring, fs.to_vec());
    let dim = j.krull_dimension();
    if dim != 1 {
        let hint = match dim {
            -1 => {
                return Err(Error::InvalidArgument(
                    "the sequence generates the unit ideal".into(),
                ))
            }
            0 => "the zero locus is a point; use ev_levine",
            _ => "use h0m_general for higher-dimensional loci",
        };
        return Err(Error::WrongDimension {
            expected: 1,
            found: dim as usize,
            hint: hint.into(),
        });
    }
    let (i, steps) = j.saturate_irrelevant();
    let s: i64 = fs.iter().map(|f| f.degree().unwrap_or(0)).sum::<i64>() - ring.weight_sum();
    let wmax = *ring.weights().iter().max().unwrap() as i64;
    let mut basis = Vec::new();
    let mut values = Vec::new();
    for d in 0..=s + wmax + 1 {
        let piece = subquotient_basis(&i, &j, d);
        if d > s && !piece.is_empty() {
            return Err(Error::Internal(format!(
                "I/J is nonzero in degree {d} above the socle degree {s}"
            )));
        }
        values.push(piece.len());
        basis.extend(piece);
    }
    values.truncate((s + 1).max(0) as usize);
    let hilbert = HilbertData::new(0, values, true);
    let mut oracle_checked = false;
    if opts.oracle && s >= 0 {
        let bound = (s + 2).max(fs.iter().filter_map(|f| f.degree()).max().unwrap_or(0));
        let rep = degreewise_oracle(
            ring,
            fs,
            bound,
            OracleOptions {
                saturation: true,
                koszul: false,
            },
        )?;
        for d in 0..=s {
            if rep.stable[d as usize] && rep.module.value(d) != hilbert.value(d) {
                return Err(Error::Internal(format!(
                    "oracle disagrees in degree {d}: {} vs {}",
                    rep.module.value(d),
                    hilbert.value(d)
                )));
            }
        }
        oracle_checked = (0..=s).all(|d| rep.stable[d as usize]);
    }
    Ok(JacobianModule {
        ring: ring.clone(),
        fs: fs.to_vec(),
        j,
        i,
        saturation_steps: steps,
        basis,
        hilbert,
        socle_degree: s,
        oracle_checked,
    })
}

/// `H^0_m(P/J) = (J : m^∞)/J` for a homogeneous ideal of any dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0mReport {
    pub hilbert: HilbertData,
    pub symmetric: bool,
    pub saturation_steps: usize,
}

pub fn h0m_general(j: &Ideal, bound: i64) -> Result<H0mReport> {
    if !j.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let (i, steps) = j.saturate_irrelevant();
    let h = i.quotient_hilbert(j, 0, bound)?;
    if h.value(bound) != 0 {
        return Err(Error::WindowTooSmall(format!(
            "H^0_m is nonzero in degree {bound}"
        )));
    }
    let symmetric = h.is_symmetric();
    Ok(H0mReport {
        hilbert: HilbertData::new(0, h.values, true),
        symmetric,
        saturation_steps: steps,
    })
}
