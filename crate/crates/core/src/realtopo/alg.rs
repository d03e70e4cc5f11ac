//! Arithmetic in `K = Q(α)` for a real algebraic `α`, and univariate
//! polynomials over `K`.
//!
//! The defining polynomial of `α` need not be irreducible. Zero tests split
//! it lazily: when `c(α) = 0` is detected the polynomial is replaced by
//! `gcd(p, c)`, otherwise by `p / gcd(p, c)`.

use num_traits::One;

use super::upoly::{sturm_count, Bound, RootInterval, UPoly};
use crate::polyarith::Rational;

#[derive(Clone, Debug)]
pub struct RealAlg {
    iv: RootInterval,
}

impl RealAlg {
    /// The root isolated by `iv`.
    pub fn new(iv: RootInterval) -> Self {
        let mut iv = iv;
        if let Some(r) = iv.as_rational() {
            iv.poly = UPoly::linear_root(r);
        } else {
            iv.poly = iv.poly.squarefree();
        }
        RealAlg { iv }
    }

    pub fn rational(r: Rational) -> Self {
        RealAlg {
            iv: RootInterval::exact(UPoly::linear_root(&r), r),
        }
    }

    pub fn poly(&self) -> &UPoly {
        &self.iv.poly
    }

    pub fn interval(&self) -> &RootInterval {
        &self.iv
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.iv.as_rational()
    }

    pub fn reduce(&self, c: &UPoly) -> UPoly {
        c.rem(&self.iv.poly)
    }

    fn contains_root(&self, g: &UPoly) -> bool {
        match self.iv.as_rational() {
            Some(r) => g.sign_at(r) == 0,
            None => {
                let (a, b) = (g.sign_at(&self.iv.lo), g.sign_at(&self.iv.hi));
                // A factor of the defining polynomial has at most that one
                // root in the interval, and none at its ends.
                a != 0 && b != 0 && a != b
            }
        }
    }

    pub fn is_zero(&mut self, c: &UPoly) -> bool {
        let c = self.reduce(c);
        if c.is_zero() {
            return true;
        }
        let g = self.iv.poly.gcd(&c);
        if g.degree() == Some(0) {
            return false;
        }
        if self.contains_root(&g) {
            self.iv.poly = g;
            true
        } else {
            self.iv.poly = self.iv.poly.div_exact(&g).monic();
            false
        }
    }

    pub fn sign(&mut self, c: &UPoly) -> i32 {
        if self.is_zero(c) {
            return 0;
        }
        let c = self.reduce(c);
        if let Some(r) = self.iv.as_rational() {
            return c.sign_at(r);
        }
        // `c` and the defining polynomial are now coprime, so refining
        // eventually isolates α from every root of `c`.
        loop {
            let (lo, hi) = (self.iv.lo.clone(), self.iv.hi.clone());
            let cnt = sturm_count(&c, &Bound::At(lo.clone()), &Bound::At(hi));
            if cnt == 0 && c.sign_at(&lo) != 0 {
                return c.sign_at(&lo);
            }
            self.iv.refine();
        }
    }

    /// Inverse of a nonzero element.
    pub fn inverse(&mut self, c: &UPoly) -> UPoly {
        let nonzero = !self.is_zero(c);
        assert!(nonzero, "inverse of zero in Q(α)");
        let (g, s, _) = self.reduce(c).ext_gcd(&self.iv.poly);
        debug_assert_eq!(g, UPoly::one());
        s
    }

    pub fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.reduce(&(a * b))
    }

    pub fn to_f64(&self) -> f64 {
        self.iv.to_f64()
    }
}

/// Polynomial in `y` with coefficients in `K`, constant term first.
pub type KPoly = Vec<UPoly>;

/// Operations on `K[y]`. All results are reduced and trimmed.
pub struct KRing<'a> {
    pub alpha: &'a mut RealAlg,
}

impl KRing<'_> {
    pub fn normalize(&mut self, p: &KPoly) -> KPoly {
        let mut q: KPoly = p.iter().map(|c| self.alpha.reduce(c)).collect();
        while let Some(c) = q.last() {
            if self.alpha.is_zero(c) {
                q.pop();
            } else {
                break;
            }
        }
        // Earlier coefficients may have become reducible after a split.
        q.iter().map(|c| self.alpha.reduce(c)).collect()
    }

    pub fn degree(p: &KPoly) -> Option<usize> {
        p.len().checked_sub(1)
    }

    pub fn derivative(&mut self, p: &KPoly) -> KPoly {
        let d: KPoly = p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
            .collect();
        self.normalize(&d)
    }

    /// Quotient and remainder; `b` must be normalized and nonzero.
    pub fn divrem(&mut self, a: &KPoly, b: &KPoly) -> (KPoly, KPoly) {
        let a = self.normalize(a);
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a);
        }
        let inv = self.alpha.inverse(b.last().unwrap());
        let mut r = a;
        let mut q = vec![UPoly::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let f = self.alpha.mul(&r[k + db], &inv);
            if f.is_zero() {
                continue;
            }
            for (j, bc) in b.iter().enumerate() {
                r[k + j] = self.alpha.reduce(&(&r[k + j] - &(&f * bc)));
            }
            q[k] = f;
        }
        r.truncate(db);
        (self.normalize(&q), self.normalize(&r))
    }

    pub fn monic(&mut self, p: &KPoly) -> KPoly {
        let p = self.normalize(p);
        match p.last() {
            None => p,
            Some(lc) => {
                let inv = self.alpha.inverse(lc);
                let q: KPoly = p.iter().map(|c| self.alpha.mul(c, &inv)).collect();
                self.normalize(&q)
            }
        }
    }

    pub fn gcd(&mut self, a: &KPoly, b: &KPoly) -> KPoly {
        let mut a = self.normalize(a);
        let mut b = self.normalize(b);
        while !b.is_empty() {
            let r = self.divrem(&a, &b).1;
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn squarefree(&mut self, p: &KPoly) -> KPoly {
        let p = self.normalize(p);
        if p.len() <= 1 {
            return p;
        }
        let d = self.derivative(&p);
        let g = self.gcd(&p, &d);
        let q = self.divrem(&p, &g).0;
        self.monic(&q)
    }

    /// `p(α, y)` as a polynomial in `α`.
    fn eval_y(&self, p: &KPoly, y: &Rational) -> UPoly {
        let mut acc = UPoly::zero();
        for c in p.iter().rev() {
            acc = &acc.scale(y) + c;
        }
        acc
    }

    pub fn sign_at(&mut self, p: &KPoly, y: &Rational) -> i32 {
        let v = self.eval_y(p, y);
        self.alpha.sign(&v)
    }

    pub fn sign_at_pos_inf(&mut self, p: &KPoly) -> i32 {
        match p.last() {
            None => 0,
            Some(c) => self.alpha.sign(&c.clone()),
        }
    }

    pub fn sign_at_neg_inf(&mut self, p: &KPoly) -> i32 {
        let s = self.sign_at_pos_inf(p);
        if p.len() % 2 == 1 {
            s
        } else {
            -s
        }
    }

    pub fn sturm_chain(&mut self, p: &KPoly) -> Vec<KPoly> {
        let mut chain = vec![self.normalize(p)];
        let mut next = self.derivative(p);
        while !next.is_empty() {
            let r = self.divrem(chain.last().unwrap(), &next).1;
            chain.push(next);
            next = r.iter().map(|c| -c).collect();
        }
        chain
    }
}

/// Real roots of a polynomial over `K`, isolated with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct KRoot {
    /// `p` is nonzero at both ends and has exactly one root in between.
    pub lo: Rational,
    pub hi: Rational,
    /// The root, when it is rational and was hit exactly.
    pub exact: Option<Rational>,
}

enum At<'a> {
    NegInf,
    PosInf,
    Y(&'a Rational),
}

fn variations_k(ring: &mut KRing<'_>, chain: &[KPoly], at: At<'_>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for p in chain {
        let s = match at {
            At::NegInf => ring.sign_at_neg_inf(p),
            At::PosInf => ring.sign_at_pos_inf(p),
            At::Y(y) => ring.sign_at(p, y),
        };
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Isolates the distinct real roots of `p ∈ K[y]`, `p ≠ 0`, in increasing order.
pub fn isolate_roots_k(alpha: &mut RealAlg, p: &KPoly) -> Vec<KRoot> {
    let mut ring = KRing { alpha };
    let q = ring.squarefree(p);
    if q.len() <= 1 {
        return Vec::new();
    }
    let chain = ring.sturm_chain(&q);
    let total =
        variations_k(&mut ring, &chain, At::NegInf) - variations_k(&mut ring, &chain, At::PosInf);
    if total == 0 {
        return Vec::new();
    }
    let two = Rational::from_integer(2.into());
    // Find a bound enclosing all roots with nonzero values at both ends.
    let mut b = Rational::one();
    loop {
        let nb = -b.clone();
        if ring.sign_at(&q, &nb) != 0 && ring.sign_at(&q, &b) != 0 {
            let k = variations_k(&mut ring, &chain, At::Y(&nb))
                - variations_k(&mut ring, &chain, At::Y(&b));
            if k == total {
                break;
            }
        }
        b *= &two;
    }
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let k = variations_k(&mut ring, &chain, At::Y(&lo))
            - variations_k(&mut ring, &chain, At::Y(&hi));
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push(KRoot {
                lo,
                hi,
                exact: None,
            });
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if ring.sign_at(&q, &mid) != 0 {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
            continue;
        }
        let mut eps = (&hi - &lo) / Rational::from_integer(4.into());
        loop {
            let (a, c) = (&mid - &eps, &mid + &eps);
            if ring.sign_at(&q, &a) != 0
                && ring.sign_at(&q, &c) != 0
                && variations_k(&mut ring, &chain, At::Y(&a))
                    - variations_k(&mut ring, &chain, At::Y(&c))
                    == 1
            {
                out.push(KRoot {
                    lo: a.clone(),
                    hi: c.clone(),
                    exact: Some(mid.clone()),
                });
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::rat;
    use crate::realtopo::upoly::isolate_roots;

    fn sqrt2() -> RealAlg {
        let p = UPoly::from_ints(&[-2, 0, 1]);
        let r = isolate_roots(&p).pop().unwrap();
        RealAlg::new(r)
    }

    #[test]
    fn signs_in_q_sqrt2() {
        let mut a = sqrt2();
        assert_eq!(a.sign(&UPoly::from_ints(&[-3, 2])), -1);
        assert_eq!(a.sign(&UPoly::from_ints(&[-2, 0, 1])), 0);
        assert_eq!(a.sign(&UPoly::from_ints(&[-7, 5])), 1);
        let inv = a.inverse(&UPoly::x());
        assert_eq!(a.mul(&inv, &UPoly::x()), UPoly::one());
    }

    #[test]
    fn reducible_definition_splits() {
        // Roots of (x^2-2)(x-3); pick sqrt 2 and test against x^2-2.
        let p = &UPoly::from_ints(&[-2, 0, 1]) * &UPoly::from_ints(&[-3, 1]);
        let r = isolate_roots(&p).into_iter().nth(1).unwrap();
        let mut a = RealAlg::new(r);
        assert!(a.is_zero(&UPoly::from_ints(&[-2, 0, 1])));
        assert_eq!(a.poly(), &UPoly::from_ints(&[-2, 0, 1]));
        assert!(!a.is_zero(&UPoly::from_ints(&[-3, 1])));
    }

    #[test]
    fn roots_over_k() {
        // y^2 - α with α = sqrt 2: roots ±2^(1/4).
        let mut a = sqrt2();
        let p: KPoly = vec![-&UPoly::x(), UPoly::zero(), UPoly::one()];
        let roots = isolate_roots_k(&mut a, &p);
        assert_eq!(roots.len(), 2);
        // (y - α)^2 (y + 1): two distinct roots, one of them rational.
        let lin: KPoly = vec![-&UPoly::x(), UPoly::one()];
        let sq = mul_k(&lin, &lin);
        let p = mul_k(&sq, &vec![UPoly::one(), UPoly::one()]);
        let roots = isolate_roots_k(&mut a, &p);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].lo < rat(-1) && roots[0].hi > rat(-1));
        assert!(roots[1].lo < rat(2) && roots[1].hi > rat(1));
    }

    fn mul_k(a: &KPoly, b: &KPoly) -> KPoly {
        let mut c = vec![UPoly::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                c[i + j] = &c[i + j] + &(x * y);
            }
        }
        c
    }
}
