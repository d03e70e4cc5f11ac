//! Dense univariate polynomials over the rationals, Sturm sequences and
//! real-root isolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::polyarith::Rational;

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    /// The variable.
    pub fn x() -> Self {
        UPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        UPoly::from_coeffs(vec![-r.clone(), Rational::one()])
    }

    pub fn from_coeffs(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UPoly::from_coeffs(
            c.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.c.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.c.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            c: self.c.iter().map(|x| x * s).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.lc()))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign(&self.eval(x))
    }

    pub fn sign_at_pos_inf(&self) -> i32 {
        sign(&self.lc())
    }

    pub fn sign_at_neg_inf(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) if d % 2 == 0 => sign(&self.lc()),
            Some(_) => -sign(&self.lc()),
        }
    }

    pub fn derivative(&self) -> Self {
        UPoly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
                .collect(),
        )
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = Rational::one() / d.lc();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[k + j] -= &f * dc;
            }
            q[k] = f;
        }
        r.truncate(dd);
        (UPoly::from_coeffs(q), UPoly::from_coeffs(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Rational::one() / r0.lc();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// The product of the distinct irreducible factors, monic.
    pub fn squarefree(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.div_exact(&self.gcd(&self.derivative())).monic()
    }

    /// Standard Sturm chain `p, p', -rem(..)`.
    pub fn sturm_chain(&self) -> Vec<UPoly> {
        let mut chain = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            let r = -&chain.last().unwrap().rem(&next);
            chain.push(next);
            next = r;
        }
        chain
    }

    pub fn pow(&self, k: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(x + s)`.
    pub fn shift(&self, s: &Rational) -> UPoly {
        let mut acc = UPoly::zero();
        let lin = UPoly::from_coeffs(vec![s.clone(), Rational::one()]);
        for c in self.c.iter().rev() {
            acc = &(&acc * &lin) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// Strictly larger than the absolute value of every real root.
    pub fn root_bound(&self) -> Rational {
        let lc = self.lc().abs();
        let m = self
            .c
            .iter()
            .take(self.c.len().saturating_sub(1))
            .map(|c| c.abs() / &lc)
            .max();
        Rational::one() + m.unwrap_or_else(Rational::zero).ceil()
    }
}

pub(crate) fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// A point of the extended real line.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

fn chain_variations(chain: &[UPoly], at: &Bound) -> usize {
    variations(chain.iter().map(|p| match at {
        Bound::NegInf => p.sign_at_neg_inf(),
        Bound::PosInf => p.sign_at_pos_inf(),
        Bound::At(x) => p.sign_at(x),
    }))
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &UPoly, lo: &Bound, hi: &Bound) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = p.squarefree().sturm_chain();
    chain_variations(&chain, lo).saturating_sub(chain_variations(&chain, hi))
}

/// An isolating interval: either `lo == hi` is the root, or `p` has exactly
/// one root in the open interval and none at the endpoints.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(skip)]
    pub poly: UPoly,
    #[serde(with = "rational_str")]
    pub lo: Rational,
    #[serde(with = "rational_str")]
    pub hi: Rational,
}

impl fmt::Debug for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "({}, {})", self.lo, self.hi)
        }
    }
}

impl RootInterval {
    pub fn exact(poly: UPoly, r: Rational) -> Self {
        RootInterval {
            poly,
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    /// Halves the interval, keeping the root.
    pub fn refine(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = self.midpoint();
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
        } else if sm == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while self.width() > *width {
            self.refine();
        }
    }

    /// Approximate value for plotting.
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.midpoint())
    }
}

pub(crate) fn rat_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Isolating intervals of the distinct real roots, in increasing order.
pub fn isolate_roots(p: &UPoly) -> Vec<RootInterval> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let q = p.squarefree();
    let chain = q.sturm_chain();
    let v = |a: &Rational| chain_variations(&chain, &Bound::At(a.clone()));
    let two = Rational::from_integer(2.into());
    let b = q.root_bound();
    let mut out = Vec::new();
    // Invariant: `q` is nonzero at both ends of every stacked interval.
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let k = v(&lo) - v(&hi);
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push(RootInterval {
                poly: q.clone(),
                lo,
                hi,
            });
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if q.sign_at(&mid) != 0 {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
            continue;
        }
        // Cut out a small neighbourhood holding only the root `mid`.
        let mut eps = (&hi - &lo) / Rational::from_integer(4.into());
        loop {
            let (a, c) = (&mid - &eps, &mid + &eps);
            if q.sign_at(&a) != 0 && q.sign_at(&c) != 0 && v(&a) - v(&c) == 1 {
                out.push(RootInterval::exact(q.clone(), mid.clone()));
                stack.push((lo, a));
                stack.push((c, hi));
                break;
            }
            eps /= &two;
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// The rational with the smallest denominator (then numerator) in `(a, b)`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    assert!(a < b);
    let fl = a.floor();
    if &(fl.clone() + Rational::one()) < b {
        // An integer lies strictly inside; take the one closest to zero.
        let lo = fl + Rational::one();
        let hi = if b.is_integer() {
            b - Rational::one()
        } else {
            b.floor()
        };
        if lo <= Rational::zero() && hi >= Rational::zero() {
            return Rational::zero();
        }
        return if lo > Rational::zero() { lo } else { hi };
    }
    // Same integer part: recurse on reciprocals of the fractional parts.
    let ip = fl;
    let (fa, fb) = (a - &ip, b - &ip);
    if fa.is_zero() {
        // (0, fb): 1/n with n = floor(1/fb) + 1.
        let n = (Rational::one() / &fb).floor() + Rational::one();
        return ip + Rational::one() / n;
    }
    let inner = simplest_between(&(Rational::one() / &fb), &(Rational::one() / &fa));
    ip + Rational::one() / inner
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = a.is_one();
            if !unit || k == 0 {
                write!(f, "{a}")?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(c)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

/// Clears denominators and the content.
pub fn primitive_part(p: &UPoly) -> UPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = g.gcd(i);
    }
    if p.lc().is_negative() {
        g = -g;
    }
    UPoly::from_coeffs(
        ints.into_iter()
            .map(|i| Rational::new(i, g.clone()))
            .collect(),
    )
}

pub(crate) mod rational_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::polyarith::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{rat, ratio};

    #[test]
    fn division_and_gcd() {
        let p = UPoly::from_ints(&[-1, 0, 1]);
        let q = UPoly::from_ints(&[1, 1]);
        let (d, r) = p.divrem(&q);
        assert_eq!(d, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.gcd(&UPoly::from_ints(&[1, 2, 1])), q);
        let (g, s, t) = p.ext_gcd(&UPoly::from_ints(&[2, 1]));
        assert_eq!(g, UPoly::one());
        assert_eq!(
            &(&s * &p) + &(&t * &UPoly::from_ints(&[2, 1])),
            UPoly::one()
        );
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(2, 3)), ratio(1, 2));
        assert_eq!(simplest_between(&rat(-3), &rat(5)), rat(0));
        assert_eq!(simplest_between(&rat(2), &ratio(5, 2)), ratio(7, 3));
        assert_eq!(simplest_between(&ratio(-7, 2), &rat(-3)), ratio(-10, 3));
    }

    #[test]
    fn shift_and_display() {
        let p = UPoly::from_ints(&[0, 0, 1]).shift(&rat(1));
        assert_eq!(p, UPoly::from_ints(&[1, 2, 1]));
        assert_eq!(p.to_string(), "x^2+2*x+1");
        assert_eq!(
            primitive_part(&UPoly::from_coeffs(vec![ratio(1, 2), ratio(-3, 4)])),
            UPoly::from_ints(&[-2, 3])
        );
    }
}
