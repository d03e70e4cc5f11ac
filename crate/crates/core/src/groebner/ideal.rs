//! Ideals of `Q[x_1..x_n]` with a cached reduced grevlex Gröbner basis.

use std::sync::{Arc, OnceLock};

use super::buchberger::{divide, groebner_basis, normal_form_vec, GbOptions};
use super::hilbert::HilbertData;
use super::modvec::{ModVec, Space};
use super::order::{ModuleOrder, MonoOrder};
use crate::error::{Error, Result};
use crate::polyarith::{monomials_of_degree, Monomial, Polynomial, Ring};

/// A reduced Gröbner basis of an ideal under a fixed monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    space: Space,
    basis: Vec<ModVec>,
}

impl GroebnerBasis {
    pub fn new(ring: &Ring, gens: &[Polynomial], order: MonoOrder) -> Result<Self> {
        Self::with_options(ring, gens, order, &GbOptions::default())
    }

    pub fn with_options(
        ring: &Ring,
        gens: &[Polynomial],
        order: MonoOrder,
        opts: &GbOptions,
    ) -> Result<Self> {
        for g in gens {
            if **g.ring() != **ring {
                return Err(Error::RingMismatch);
            }
        }
        let space = Space::new(ring, ModuleOrder::polynomial(order), 1);
        let vecs: Vec<ModVec> = gens.iter().map(|g| space.from_poly(g)).collect();
        let r = groebner_basis(&space, &vecs, opts)?;
        Ok(GroebnerBasis {
            space,
            basis: r.basis,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.space.ring
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis elements, monic, sorted by increasing leading monomial.
    pub fn polys(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|v| self.space.to_poly(v)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|v| v.terms[0].mon.clone()).collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let v = self.space.from_poly(p);
        self.space
            .to_poly(&normal_form_vec(&self.space, &v, &self.basis))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        let v = self.space.from_poly(p);
        normal_form_vec(&self.space, &v, &self.basis).is_zero()
    }

    /// Quotients and remainder of the division of `p` by the basis.
    pub fn divide(&self, p: &Polynomial) -> (Vec<Polynomial>, Polynomial) {
        let v = self.space.from_poly(p);
        let (q, r) = divide(&self.space, &v, &self.basis);
        (q, self.space.to_poly(&r))
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.basis.iter().any(|g| g.terms[0].mon.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.terms[0].mon.is_one())
    }
}

/// An ideal given by generators; the reduced grevlex basis is computed once.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.gb().polys() == other.gb().polys()
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: Arc::new(OnceLock::new()),
        }
    }

    /// The ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Self {
        Ideal::new(
            ring,
            (0..ring.nvars())
                .map(|i| Polynomial::var(ring, i))
                .collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            GroebnerBasis::new(&self.ring, &self.gens, MonoOrder::Grevlex)
                .expect("uncapped Gröbner basis")
        })
    }

    /// Ideal generated by its reduced Gröbner basis.
    pub fn reduced(&self) -> Ideal {
        Ideal::new(&self.ring, self.gb().polys())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.gb().normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.gb().contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ideal::new(&self.ring, g)
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]);
        for _ in 0..k {
            acc = acc.product(self).reduced();
        }
        acc
    }

    /// `J : (g)`.
    pub fn colon(&self, g: &Polynomial) -> Ideal {
        self.colon_ideal(&Ideal::new(&self.ring, vec![g.clone()]))
    }

    /// `J : K = { p : p K ⊆ J }`, read off a position-over-term basis of the
    /// module spanned by `(k_1, .., k_r, 1)` and `f e_i` in `P^{r+1}`.
    pub fn colon_ideal(&self, k: &Ideal) -> Ideal {
        let ring = &self.ring;
        let ks: Vec<Polynomial> = k.gb().polys();
        if ks.is_empty() {
            return Ideal::new(ring, vec![Polynomial::one(ring)]);
        }
        let r = ks.len();
        let space = Space::new(
            ring,
            ModuleOrder::Pot {
                mono: MonoOrder::Grevlex,
            },
            r + 1,
        );
        let mut gens = Vec::new();
        let mut first = ks.clone();
        first.push(Polynomial::one(ring));
        gens.push(space.from_polys(&first));
        for f in self.gb().polys() {
            for i in 0..r {
                gens.push(space.embed(&f, i));
            }
        }
        let gb = groebner_basis(&space, &gens, &GbOptions::default()).expect("uncapped");
        let out: Vec<Polynomial> = gb
            .basis
            .iter()
            .filter(|v| v.terms[0].comp as usize == r)
            .map(|v| space.to_polys(v).pop().unwrap())
            .collect();
        Ideal::new(ring, out).reduced()
    }

    /// `J : m^∞` by iterated colon with the irrelevant ideal; also returns
    /// the number of strict enlargements before stabilisation.
    pub fn saturate_irrelevant(&self) -> (Ideal, usize) {
        let m = Ideal::maximal(&self.ring);
        let mut cur = self.reduced();
        let mut steps = 0;
        loop {
            let next = cur.colon_ideal(&m);
            if next == cur {
                return (cur, steps);
            }
            cur = next;
            steps += 1;
        }
    }

    /// Krull dimension of `P / J` (`-1` for the unit ideal), from maximal
    /// independent sets of the leading-term ideal.
    pub fn krull_dimension(&self) -> i64 {
        let gb = self.gb();
        if gb.is_unit() {
            return -1;
        }
        let n = self.ring.nvars();
        let lms = gb.leading_monomials();
        let mut best = 0i64;
        for mask in 0u32..(1 << n) {
            let size = mask.count_ones() as i64;
            if size <= best {
                continue;
            }
            let independent = lms
                .iter()
                .all(|m| m.support().any(|v| mask & (1 << v) == 0));
            if independent {
                best = size;
            }
        }
        best
    }

    /// Standard monomials of degree `d`, i.e. a basis of `(P/J)_d`.
    pub fn kbase(&self, d: i64) -> Vec<Monomial> {
        let gb = self.gb();
        monomials_of_degree(self.ring.weights(), d)
            .into_iter()
            .filter(|m| gb.is_standard(m))
            .collect()
    }

    /// Hilbert function of `P/J` on `[lo, hi]`; requires homogeneous input.
    pub fn hilbert(&self, lo: i64, hi: i64) -> Result<HilbertData> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let vals = (lo..=hi).map(|d| self.kbase(d).len()).collect();
        Ok(HilbertData::new(lo, vals, self.krull_dimension() <= 0))
    }

    /// Hilbert function of `self / inner` for `inner ⊆ self`.
    pub fn quotient_hilbert(&self, inner: &Ideal, lo: i64, hi: i64) -> Result<HilbertData> {
        let a = inner.hilbert(lo, hi)?;
        let b = self.hilbert(lo, hi)?;
        let vals = a.values.iter().zip(&b.values).map(|(x, y)| x - y).collect();
        Ok(HilbertData::new(lo, vals, false))
    }

    /// Whether `g` lies in the radical (some power, up to `max_power`).
    pub fn radical_contains(&self, g: &Polynomial, max_power: u32) -> bool {
        let mut p = g.clone();
        for _ in 0..max_power {
            let r = self.normal_form(&p);
            if r.is_zero() {
                return true;
            }
            p = &r * g;
        }
        false
    }

    /// `dim_Q P/J` when finite.
    pub fn vector_space_dim(&self) -> Option<usize> {
        if self.krull_dimension() > 0 {
            return None;
        }
        let gb = self.gb();
        if gb.is_unit() {
            return Some(0);
        }
        Some(self.standard_monomials().len())
    }

    /// All standard monomials of a zero-dimensional ideal, increasing in
    /// grevlex.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        let gb = self.gb();
        let n = self.ring.nvars();
        let lms = gb.leading_monomials();
        let mut out = Vec::new();
        // Bound for each exponent from pure powers.
        let mut bound = vec![0u32; n];
        for (i, b) in bound.iter_mut().enumerate() {
            *b = lms
                .iter()
                .filter(|m| m.support().all(|v| v == i))
                .map(|m| m.exp(i))
                .min()
                .unwrap_or(0);
        }
        let mut cur = vec![0u32; n];
        fn rec(
            i: usize,
            cur: &mut Vec<u32>,
            bound: &[u32],
            gb: &GroebnerBasis,
            out: &mut Vec<Monomial>,
        ) {
            if i == cur.len() {
                let m = Monomial::from_exponents(cur);
                if gb.is_standard(&m) {
                    out.push(m);
                }
                return;
            }
            for e in 0..bound[i] {
                cur[i] = e;
                rec(i + 1, cur, bound, gb, out);
            }
            cur[i] = 0;
        }
        if bound.iter().all(|&b| b > 0) {
            rec(0, &mut cur, &bound, gb, &mut out);
        }
        let w = self.ring.weights().to_vec();
        out.sort_by(|a, b| a.cmp_grevlex(b, &w));
        out
    }

    /// Elimination ideal `J ∩ Q[x_j : j ∉ vars]` (kept in the same ring).
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut perm: Vec<usize> = vars.to_vec();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        let names: Vec<String> = perm.iter().map(|&i| self.ring.names()[i].clone()).collect();
        let weights: Vec<u32> = perm.iter().map(|&i| self.ring.weight(i)).collect();
        let r2 = crate::polyarith::VarSet::new(names, weights)?;
        let mut inv = vec![0; n];
        for (k, &i) in perm.iter().enumerate() {
            inv[i] = k;
        }
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.rename_into(&r2, &inv)).collect();
        let gb = GroebnerBasis::new(
            &r2,
            &gens,
            MonoOrder::Elimination(vec![vars.len(), n - vars.len()]),
        )?;
        let kept: Vec<Polynomial> = gb
            .polys()
            .into_iter()
            .filter(|p| {
                p.terms()
                    .iter()
                    .all(|(m, _)| (0..vars.len()).all(|k| m.exp(k) == 0))
            })
            .map(|p| p.rename_into(&self.ring, &perm))
            .collect();
        Ok(Ideal::new(&self.ring, kept))
    }
}

impl From<(&Ring, Vec<Polynomial>)> for Ideal {
    fn from((r, g): (&Ring, Vec<Polynomial>)) -> Self {
        Ideal::new(r, g)
    }
}
