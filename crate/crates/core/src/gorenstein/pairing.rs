//! The duality pairing on `M = I/J`, in two modes.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::conjecture::conjecture_check;
use super::module::{coordinates_in, subquotient_basis, JacobianModule};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::homology::{
    free_resolution, koszul_complex, lift_map, GradedModulePresentation, ImageSolver, Matrix,
};
use crate::linalg::Row;
use crate::polyarith::{jacobian_det, monomials_of_degree, Monomial, Polynomial, Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairingMode {
    Hessian,
    Homological,
}

impl std::fmt::Display for PairingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PairingMode::Hessian => "hessian",
            PairingMode::Homological => "homological",
        })
    }
}

/// Exact Gram matrix of the pairing on the basis of `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    pub mode: PairingMode,
    pub entries: Vec<Row>,
    /// Human-readable record of the functional used.
    pub normalization: String,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        crate::quadform::is_symmetric(&self.entries)
    }

    /// `B(M_a, M_b) = 0` unless `a + b = s`.
    pub fn is_graded_antidiagonal(&self, m: &JacobianModule) -> bool {
        let s = m.socle_degree;
        (0..self.size()).all(|i| {
            (0..self.size())
                .all(|j| m.basis[i].degree + m.basis[j].degree == s || self.entries[i][j].is_zero())
        })
    }
}

/// Residue functional on an artinian complete intersection `P/(t)`:
/// `ψ(jac t) = dim_Q P/(t)`, zero below the top degree.
pub struct Residue {
    ideal: Ideal,
    top: Monomial,
    scale: Rational,
}

impl Residue {
    pub fn new(ring: &Ring, t: &[Polynomial]) -> Result<Self> {
        let ideal = Ideal::new(ring, t.to_vec());
        let dim = ideal
            .vector_space_dim()
            .ok_or_else(|| Error::RegularSequence("sequence is not zero-dimensional".into()))?;
        let jac = jacobian_det(t)?;
        let top_deg = jac
            .degree()
            .ok_or_else(|| Error::RegularSequence("jacobian vanishes".into()))?;
        let nf = ideal.normal_form(&jac);
        let tops: Vec<Monomial> = monomials_of_degree(ring.weights(), top_deg)
            .into_iter()
            .filter(|m| ideal.gb().is_standard(m))
            .collect();
        if tops.len() != 1 {
            return Err(Error::Internal(format!(
                "socle of P/(t) has dimension {}",
                tops.len()
            )));
        }
        let c = nf.coefficient(&tops[0]);
        if c.is_zero() {
            return Err(Error::Internal("jacobian is zero in P/(t)".into()));
        }
        Ok(Residue {
            ideal,
            top: tops[0].clone(),
            scale: Rational::from_integer((dim as i64).into()) / c,
        })
    }

    pub fn apply(&self, g: &Polynomial) -> Rational {
        &self.ideal.normal_form(g).coefficient(&self.top) * &self.scale
    }
}

/// `n` generic combinations of the degree-`D` part of `k`, certified regular
/// by `dim P/(t_1..t_i) = n - i`.
pub fn regular_sequence(k: &Ideal, seed: u64, trials: usize) -> Result<Vec<Polynomial>> {
    let ring = k.ring();
    let n = ring.nvars();
    let gens = k.gb().polys();
    if gens.is_empty() {
        return Err(Error::RegularSequence("ideal is zero".into()));
    }
    let degs: Vec<i64> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let lo = *degs.iter().min().unwrap();
    let hi = *degs.iter().max().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for d in lo..=hi + 2 * lo.max(1) {
        let mut span: Vec<Polynomial> = Vec::new();
        for (g, &e) in gens.iter().zip(&degs) {
            if e > d {
                continue;
            }
            for m in monomials_of_degree(ring.weights(), d - e) {
                span.push(g.mul_term(&m, &Rational::one()));
            }
        }
        if span.is_empty() || Ideal::new(ring, span.clone()).krull_dimension() != 0 {
            continue;
        }
        for _ in 0..trials {
            let mut t = Vec::with_capacity(n);
            for _ in 0..n {
                let mut acc = Polynomial::zero(ring);
                for s in &span {
                    let c: i64 = rng.gen_range(-3..=3);
                    if c != 0 {
                        acc = &acc + &s.scale(&Rational::from_integer(c.into()));
                    }
                }
                t.push(acc);
            }
            let ok = (1..=n)
                .all(|i| Ideal::new(ring, t[..i].to_vec()).krull_dimension() == (n - i) as i64);
            if ok {
                return Ok(t);
            }
        }
        return Err(Error::RegularSequence(format!(
            "{trials} random trials in degree {d} failed; try another seed"
        )));
    }
    Err(Error::RegularSequence(
        "annihilator has no m-primary graded piece in range".into(),
    ))
}

/// Data shared by all entries of the homological Gram matrix.
pub struct HomologicalPairing {
    /// Regular sequence in `J : I` used for the residue.
    pub t: Vec<Polynomial>,
    /// `u[a]`: the Ext class of the basis element `a`, as a covector on `F_n`.
    u: Vec<Vec<Polynomial>>,
    /// `w[b]`: top component of the lift of `1 ↦ b` from `K(t)` to `F`.
    w: Vec<Vec<Polynomial>>,
    residue: Residue,
}

impl HomologicalPairing {
    pub fn new(m: &JacobianModule, seed: u64) -> Result<Self> {
        let ring = &m.ring;
        let n = ring.nvars();
        let pres = GradedModulePresentation::cyclic(ring, &m.fs);
        let f = free_resolution(&pres, n + 1)?;
        if f.length() != n {
            return Err(Error::Internal(format!(
                "P/J has projective dimension {} not {n}",
                f.length()
            )));
        }
        let one = Matrix::identity(ring, 1);
        let koszul = koszul_complex(ring, &m.fs)?;
        let c = lift_map(&koszul, &f, &one)?;
        let v: Vec<Polynomial> = (0..f.rank(n))
            .map(|j| c.maps[n].entries[j][0].clone())
            .collect();
        // r_a = Σ p_j v_j + Σ q_i f_i
        let mut row = v.clone();
        row.extend(m.fs.iter().cloned());
        let solver = ImageSolver::new(
            ring,
            &Matrix::from_columns(
                ring,
                1,
                &row.iter().map(|p| vec![p.clone()]).collect::<Vec<_>>(),
            ),
            &[0],
        )?;
        let mut u = Vec::with_capacity(m.dim());
        for b in &m.basis {
            let x = solver
                .solve(&[b.rep.clone()])
                .ok_or_else(|| Error::Internal("basis element is not reached by Ext^n".into()))?;
            u.push(x[..v.len()].to_vec());
        }
        let k = m.j.colon_ideal(&m.i);
        let t = regular_sequence(&k, seed, 32)?;
        let residue = Residue::new(ring, &t)?;
        let kt = koszul_complex(ring, &t)?;
        let mut w = Vec::with_capacity(m.dim());
        for b in &m.basis {
            let phi0 = Matrix::from_columns(ring, 1, &[vec![b.rep.clone()]]);
            let g = lift_map(&kt, &f, &phi0)?;
            w.push(g.maps[n].column(0));
        }
        Ok(HomologicalPairing { t, u, w, residue })
    }

    pub fn value(&self, a: usize, b: usize) -> Rational {
        let ring = self.t[0].ring();
        let mut acc = Polynomial::zero(ring);
        for (p, q) in self.u[a].iter().zip(&self.w[b]) {
            if !p.is_zero() && !q.is_zero() {
                acc = &acc + &(p * q);
            }
        }
        self.residue.apply(&acc)
    }
}

/// Reference pairing through resolutions, lifts and a residue on `P/(t)`.
pub fn pairing_homological(m: &JacobianModule, seed: u64) -> Result<GramMatrix> {
    let size = m.dim();
    if size == 0 {
        return Ok(GramMatrix {
            mode: PairingMode::Homological,
            entries: Vec::new(),
            normalization: "empty module".into(),
        });
    }
    let h = HomologicalPairing::new(m, seed)?;
    let mut entries = vec![vec![Rational::zero(); size]; size];
    for a in 0..size {
        for b in 0..size {
            if m.basis[a].degree + m.basis[b].degree == m.socle_degree {
                entries[a][b] = h.value(a, b);
            }
        }
    }
    let t: Vec<String> = h.t.iter().map(|p| p.to_string()).collect();
    Ok(GramMatrix {
        mode: PairingMode::Homological,
        entries,
        normalization: format!(
            "residue on P/(t) with psi(jac t) = dim P/(t), t = [{}]",
            t.join("; ")
        ),
    })
}

/// Pairing `B(a, b) = ℓ(a b mod IJ)` with `ℓ` the coordinate functional of
/// the Jacobian determinant in the top piece of `I^2/IJ`.
pub fn pairing_hessian(m: &JacobianModule) -> Result<GramMatrix> {
    let report = conjecture_check(m, None)?;
    if !report.socle_one_dimensional || !report.hessian_in_socle {
        return Err(Error::SocleCheckFailed(report.evidence()));
    }
    hessian_gram(m)
}

fn hessian_gram(m: &JacobianModule) -> Result<GramMatrix> {
    let s = m.socle_degree;
    let i2 = m.i.product(&m.i);
    let ij = m.i.product(&m.j);
    let top = subquotient_basis(&i2, &ij, s);
    let h = jacobian_det(&m.fs)?;
    let eta = coordinates_in(&ij, &top, &h);
    let k0 = eta
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::SocleCheckFailed("Jacobian determinant vanishes in I^2/IJ".into()))?;
    let scale = Rational::one() / &eta[k0];
    let size = m.dim();
    let mut entries = vec![vec![Rational::zero(); size]; size];
    for a in 0..size {
        for b in a..size {
            if m.basis[a].degree + m.basis[b].degree != s {
                continue;
            }
            let prod = &m.basis[a].rep * &m.basis[b].rep;
            let v = coordinates_in(&ij, &top, &prod);
            let val = &v[k0] * &scale;
            entries[a][b] = val.clone();
            entries[b][a] = val;
        }
    }
    Ok(GramMatrix {
        mode: PairingMode::Hessian,
        entries,
        normalization: format!(
            "coordinate of {} in the monomial basis of (I^2/IJ)_{s}, l(h) = 1",
            Polynomial::monomial(&m.ring, top[k0].monomial.clone(), Rational::one())
        ),
    })
}
