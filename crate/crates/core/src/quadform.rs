//! Inertia of symmetric rational matrices.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Row;
use crate::polyarith::Rational;

/// Numbers of positive, negative and zero squares in a diagonalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.plus as i64 - self.minus as i64
    }

    pub fn rank(&self) -> usize {
        self.plus + self.minus
    }

    /// Sign of the determinant.
    pub fn det_sign(&self) -> i32 {
        if self.zero > 0 {
            0
        } else if self.minus % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

pub fn is_symmetric(a: &[Row]) -> bool {
    let n = a.len();
    a.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..i).all(|j| a[i][j] == a[j][i]))
}

/// Inertia by symmetric congruence elimination.
pub fn signature_exact(a: &[Row]) -> Result<Inertia> {
    if !is_symmetric(a) {
        return Err(Error::NotSymmetric);
    }
    let mut m: Vec<Row> = a.to_vec();
    let n = m.len();
    let mut inertia = Inertia {
        plus: 0,
        minus: 0,
        zero: 0,
    };
    let mut k = 0;
    while k < n {
        let piv = (k..n).find(|&i| !m[i][i].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => {
                // Zero diagonal: a nonzero a_ij makes e_i + e_j anisotropic.
                let off = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !m[i][j].is_zero());
                let Some((i, j)) = off else {
                    inertia.zero += n - k;
                    break;
                };
                add_congruent(&mut m, i, j);
                i
            }
        };
        swap_congruent(&mut m, k, piv);
        let p = m[k][k].clone();
        if p.is_positive() {
            inertia.plus += 1;
        } else {
            inertia.minus += 1;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &p;
            for j in k..n {
                let v = &f * &m[k][j];
                m[i][j] -= v;
            }
        }
        for i in k + 1..n {
            m[k][i] = Rational::zero();
            for j in k + 1..n {
                if i > j {
                    let v = m[i][j].clone();
                    m[j][i] = v;
                }
            }
        }
        k += 1;
    }
    Ok(inertia)
}

/// Row and column `i` += row and column `j`.
fn add_congruent(m: &mut [Row], i: usize, j: usize) {
    let n = m.len();
    for c in 0..n {
        let v = m[j][c].clone();
        m[i][c] += v;
    }
    for r in 0..n {
        let v = m[r][j].clone();
        m[r][i] += v;
    }
}

fn swap_congruent(m: &mut [Row], i: usize, j: usize) {
    if i == j {
        return;
    }
    m.swap(i, j);
    for r in m.iter_mut() {
        r.swap(i, j);
    }
}

/// Characteristic polynomial `det(λ - A)` by Faddeev–LeVerrier;
/// `c[k]` is the coefficient of `λ^k`.
pub fn char_poly(a: &[Row]) -> Vec<Rational> {
    let n = a.len();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk: Vec<Row> = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = crate::linalg::mat_mul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = next;
        let am = crate::linalg::mat_mul(a, &mk);
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -tr / Rational::from_integer((k as i64).into());
    }
    c
}

fn sign_changes(c: &[Rational]) -> usize {
    let signs: Vec<bool> = c
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from the characteristic polynomial by Descartes' rule, which is
/// exact because every root is real.
pub fn signature_charpoly_check(a: &[Row]) -> Result<Inertia> {
    if !is_symmetric(a) {
        return Err(Error::NotSymmetric);
    }
    let c = char_poly(a);
    let zero = c.iter().position(|x| !x.is_zero()).unwrap_or(0);
    let plus = sign_changes(&c);
    let neg: Vec<Rational> = c
        .iter()
        .enumerate()
        .map(|(k, x)| if k % 2 == 1 { -x } else { x.clone() })
        .collect();
    let minus = sign_changes(&neg);
    Ok(Inertia { plus, minus, zero })
}
