//! Signatures along a pencil `F_t = t f + (1 - t) g`.

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{signature_of, SignatureOptions};
use crate::error::{Error, Result};
use crate::polyarith::{Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilSample {
    pub t: String,
    pub signature: Option<i64>,
    pub dim_m: Option<usize>,
    /// Degree of the singular locus, read off the Hilbert function of
    /// `P / I` in the stable range.
    pub singular_degree: Option<usize>,
    /// Same singular degree as the first computed sample.
    pub admissible: bool,
    /// Why the sample was skipped.
    pub error: Option<String>,
}

pub fn pencil_signature(
    f: &Polynomial,
    g: &Polynomial,
    samples: &[Rational],
    opts: SignatureOptions,
) -> Result<Vec<PencilSample>> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let mut reference = None;
    let mut out = Vec::with_capacity(samples.len());
    for t in samples {
        let ft = &f.scale(t) + &g.scale(&(Rational::one() - t));
        let sample = match signature_of(&ft, opts) {
            Ok(r) => {
                let m = &r.module;
                let top =
                    m.i.gb()
                        .polys()
                        .iter()
                        .filter_map(|p| p.degree())
                        .max()
                        .unwrap_or(0);
                let d = (m.socle_degree + 2).max(top + 1);
                let deg = m.i.hilbert(d, d).ok().map(|h| h.value(d));
                let reference = *reference.get_or_insert(deg);
                PencilSample {
                    t: t.to_string(),
                    signature: Some(r.signature()),
                    dim_m: Some(m.dim()),
                    singular_degree: deg,
                    admissible: deg.is_some() && deg == reference,
                    error: None,
                }
            }
            Err(e) => PencilSample {
                t: t.to_string(),
                signature: None,
                dim_m: None,
                singular_degree: None,
                admissible: false,
                error: Some(e.to_string()),
            },
        };
        out.push(sample);
    }
    Ok(out)
}

/// The common signature of the admissible samples, or `None` when they
/// disagree or none is admissible.
pub fn constant_signature(samples: &[PencilSample]) -> Option<i64> {
    let mut vals = samples
        .iter()
        .filter(|s| s.admissible)
        .filter_map(|s| s.signature);
    let first = vals.next()?;
    vals.all(|v| v == first).then_some(first)
}
