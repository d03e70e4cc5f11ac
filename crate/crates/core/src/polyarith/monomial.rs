//! Exponent vectors.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A monomial `x^a` stored as a dense exponent vector over the variables of
/// its ring.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Weighted degree `sum w_i a_i`.
    #[inline]
    pub fn degree(&self, weights: &[u32]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Weighted graded reverse lexicographic comparison.
    pub fn cmp_grevlex(&self, other: &Monomial, weights: &[u32]) -> Ordering {
        let da = self.degree(weights);
        let db = other.degree(weights);
        da.cmp(&db).then_with(|| self.cmp_revlex_tail(other))
    }

    /// Tie-break of grevlex on equal degree: the monomial with the smaller
    /// exponent in the last differing variable is larger.
    #[inline]
    pub fn cmp_revlex_tail(&self, other: &Monomial) -> Ordering {
        for i in (0..self.0.len()).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.0.iter().cmp(other.0.iter())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.0.as_slice())
    }
}

/// All monomials in `nvars` variables of weighted degree exactly `d`,
/// listed in decreasing grevlex order.
pub fn monomials_of_degree(weights: &[u32], d: i64) -> Vec<Monomial> {
    let n = weights.len();
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let mut cur = vec![0u32; n];
    fn rec(i: usize, rest: i64, weights: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = weights.len();
        if i + 1 == n {
            let w = weights[i] as i64;
            if rest % w == 0 {
                cur[i] = (rest / w) as u32;
                out.push(Monomial::from_exponents(cur));
            }
            return;
        }
        let w = weights[i] as i64;
        let mut e = rest / w;
        loop {
            cur[i] = e as u32;
            rec(i + 1, rest - e * w, weights, cur, out);
            if e == 0 {
                break;
            }
            e -= 1;
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, weights, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp_grevlex(a, weights));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basic() {
        let w = [1, 1, 1];
        let x = Monomial::from_exponents(&[1, 0, 0]);
        let y = Monomial::from_exponents(&[0, 1, 0]);
        let z = Monomial::from_exponents(&[0, 0, 1]);
        assert_eq!(x.cmp_grevlex(&y, &w), Ordering::Greater);
        assert_eq!(y.cmp_grevlex(&z, &w), Ordering::Greater);
        // x*z < y^2 in grevlex
        let xz = x.mul(&z);
        let y2 = y.mul(&y);
        assert_eq!(xz.cmp_grevlex(&y2, &w), Ordering::Less);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(&[1, 1, 1], 3).len(), 10);
        assert_eq!(monomials_of_degree(&[1, 2], 4).len(), 3);
        assert_eq!(monomials_of_degree(&[2, 2], 3).len(), 0);
        assert_eq!(monomials_of_degree(&[1, 1], -1).len(), 0);
    }
}
