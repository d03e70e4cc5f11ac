//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::Ring;

/// Exact rational coefficients.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial with nonzero rational coefficients, terms sorted by
/// decreasing weighted grevlex order of its ring.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, rat(c))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), Rational::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, Rational)>) -> Self {
        let w = ring.weights().to_vec();
        terms.sort_by(|a, b| b.0.cmp_grevlex(&a.0, &w));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c))
                }
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        let w = self.ring.weights();
        self.terms
            .binary_search_by(|(tm, _)| m.cmp_grevlex(tm, w))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Largest weighted degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        let w = self.ring.weights();
        self.terms.iter().map(|(m, _)| m.degree(w)).max()
    }

    pub fn min_degree(&self) -> Option<i64> {
        let w = self.ring.weights();
        self.terms.iter().map(|(m, _)| m.degree(w)).min()
    }

    /// True when all terms share one weighted degree (the zero polynomial
    /// counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_part(&self, d: i64) -> Polynomial {
        let w = self.ring.weights();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(w) == d)
                .cloned()
                .collect(),
        }
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            *self.ring == *other.ring,
            "polynomial arithmetic across different rings"
        );
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        self.check_ring(other);
        let w = self.ring.weights();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_grevlex(&b[j].0, w) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other {
                        -&b[j].1
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, a)| (tm.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let e = m.exp(i);
                let mut m2 = m.clone();
                m2.set_exp(i, e - 1);
                (m2, c * rat(e as i64))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Multiplies by a constant so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            g = num_integer::gcd(g, v);
        }
        let mut s = Rational::new(den, g);
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Re-embeds the polynomial into another ring by mapping variable `i`
    /// to variable `map[i]` of `target`.
    pub fn rename_into(&self, target: &Ring, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        self.merge(&rhs, false)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self.merge(&rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.names()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write_monomial(f, &self.ring, m)?;
            } else {
                write!(f, "{a}*")?;
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
