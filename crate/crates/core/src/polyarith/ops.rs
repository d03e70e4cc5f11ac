//! Calculus and structural constructions on polynomials.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::{Polynomial, Rational};
use super::ring::{Ring, VarSet};
use crate::error::{Error, Result};
use crate::linalg;

pub fn gradient(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.ring().nvars()).map(|i| f.partial(i)).collect()
}

/// Determinant of a square polynomial matrix by Laplace expansion over
/// column subsets (memoised, `O(n 2^n)` products).
pub fn det_poly(m: &[Vec<Polynomial>], ring: &Ring) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    // minors[mask] = det of rows (n - |mask|)..n, columns in mask
    let mut minors: HashMap<u32, Polynomial> = HashMap::new();
    minors.insert(0, Polynomial::one(ring));
    for size in 1..=n {
        let row = n - size;
        let mut next = HashMap::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut acc = Polynomial::zero(ring);
            let mut sign_pos = 0;
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let entry = &m[row][c];
                if !entry.is_zero() {
                    if let Some(minor) = minors.get(&(mask & !(1 << c))) {
                        let t = entry * minor;
                        acc = if sign_pos % 2 == 0 {
                            &acc + &t
                        } else {
                            &acc - &t
                        };
                    }
                }
                sign_pos += 1;
            }
            if !acc.is_zero() {
                next.insert(mask, acc);
            }
        }
        minors = next;
    }
    minors
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| Polynomial::zero(ring))
}

/// `det(∂f_i/∂x_j)` for `n` polynomials in `n` variables.
pub fn jacobian_det(fs: &[Polynomial]) -> Result<Polynomial> {
    let ring = fs
        .first()
        .ok_or(Error::LengthMismatch {
            expected: 1,
            got: 0,
        })?
        .ring()
        .clone();
    if fs.len() != ring.nvars() {
        return Err(Error::LengthMismatch {
            expected: ring.nvars(),
            got: fs.len(),
        });
    }
    if fs.iter().any(|f| *f.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let m: Vec<Vec<Polynomial>> = fs.iter().map(gradient).collect();
    Ok(det_poly(&m, &ring))
}

/// Determinant of the Hessian matrix of `f`.
pub fn hessian(f: &Polynomial) -> Polynomial {
    let m: Vec<Vec<Polynomial>> = gradient(f).iter().map(gradient).collect();
    det_poly(&m, f.ring())
}

/// Multiplies each term by a power of `new_var` so that the result is
/// homogeneous of `target_degree`. `new_var` must be a unit-weight variable
/// of the ring of `p` that does not occur in `p`.
pub fn homogenize(p: &Polynomial, new_var: usize, target_degree: i64) -> Result<Polynomial> {
    let ring = p.ring();
    if new_var >= ring.nvars() {
        return Err(Error::InvalidArgument(
            "homogenizing variable out of range".into(),
        ));
    }
    if ring.weight(new_var) != 1 {
        return Err(Error::InvalidArgument(
            "homogenizing variable must have weight 1".into(),
        ));
    }
    if p.terms().iter().any(|(m, _)| m.exp(new_var) > 0) {
        return Err(Error::InvalidArgument(format!(
            "`{}` already occurs in the polynomial",
            ring.names()[new_var]
        )));
    }
    if let Some(d) = p.degree() {
        if d > target_degree {
            return Err(Error::DegreeTooSmall {
                target: target_degree,
                degree: d,
            });
        }
    }
    let w = ring.weights();
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut m2 = m.clone();
            m2.set_exp(new_var, (target_degree - m.degree(w)) as u32);
            (m2, c.clone())
        })
        .collect();
    Ok(Polynomial::from_terms(ring, terms))
}

/// Ring obtained by appending one unit-weight variable.
pub fn extend_ring(ring: &Ring, name: &str) -> Result<Ring> {
    let mut names = ring.names().to_vec();
    names.push(name.to_string());
    let mut weights = ring.weights().to_vec();
    weights.push(1);
    VarSet::new(names, weights)
}

/// Homogenizes into a fresh ring with an extra variable `name` appended.
pub fn homogenize_new(p: &Polynomial, name: &str, target_degree: i64) -> Result<Polynomial> {
    let ring = extend_ring(p.ring(), name)?;
    let n = p.ring().nvars();
    let lifted = p.rename_into(&ring, &(0..n).collect::<Vec<_>>());
    homogenize(&lifted, n, target_degree)
}

/// Thom–Sebastiani sum `f(x) + g(y)` in the concatenated ring.
pub fn direct_sum(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (rf, rg) = (f.ring(), g.ring());
    if let Some(v) = rf.names().iter().find(|n| rg.index_of(n).is_some()) {
        return Err(Error::OverlappingVariables(v.clone()));
    }
    let mut names = rf.names().to_vec();
    names.extend(rg.names().iter().cloned());
    let mut weights = rf.weights().to_vec();
    weights.extend_from_slice(rg.weights());
    let ring = VarSet::new(names, weights)?;
    let nf = rf.nvars();
    let a = f.rename_into(&ring, &(0..nf).collect::<Vec<_>>());
    let b = g.rename_into(&ring, &(nf..nf + rg.nvars()).collect::<Vec<_>>());
    Ok(&a + &b)
}

/// `p(A x)`: variable `x_i` is replaced by `sum_j A[i][j] x_j`.
pub fn substitute_linear(p: &Polynomial, a: &[Vec<Rational>]) -> Result<Polynomial> {
    let ring = p.ring();
    let n = ring.nvars();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: a.len(),
        });
    }
    for (i, row) in a.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() && ring.weight(i) != ring.weight(j) {
                return Err(Error::WeightIncompatible);
            }
        }
    }
    if linalg::det(a).is_zero() {
        return Err(Error::SingularMatrix);
    }
    let images: Vec<Polynomial> = a
        .iter()
        .map(|row| {
            let terms = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (Monomial::var(n, j), c.clone()))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ok(substitute(p, &images))
}

/// Substitutes polynomials for all variables (images must share a ring).
pub fn substitute(p: &Polynomial, images: &[Polynomial]) -> Polynomial {
    let target = images
        .first()
        .map(|q| q.ring().clone())
        .unwrap_or_else(|| p.ring().clone());
    let mut powers: Vec<Vec<Polynomial>> = images
        .iter()
        .map(|q| vec![Polynomial::one(&target), q.clone()])
        .collect();
    let mut acc = Polynomial::zero(&target);
    for (m, c) in p.terms() {
        let mut t = Polynomial::constant(&target, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e as usize {
                let next = powers[i].last().unwrap() * &images[i];
                powers[i].push(next);
            }
            t = &t * &powers[i][e as usize];
        }
        acc = &acc + &t;
    }
    acc
}

/// The permutation matrix sending `x_i` to `x_{perm[i]}`.
pub fn permutation_matrix(perm: &[usize]) -> Vec<Vec<Rational>> {
    let n = perm.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if perm[i] == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Sets variable `v` to the constant `value`, keeping the ring.
pub fn specialize(p: &Polynomial, v: usize, value: &Rational) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut m2 = m.clone();
            let e = m.exp(v);
            m2.set_exp(v, 0);
            let mut k = c.clone();
            for _ in 0..e {
                k *= value;
            }
            (m2, k)
        })
        .collect();
    Polynomial::from_terms(p.ring(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{parse, rat};

    fn r2() -> Ring {
        VarSet::unit(&["x", "y"]).unwrap()
    }

    #[test]
    fn jacobians() {
        let r = r2();
        let p = |s: &str| parse(s, &r).unwrap();
        assert_eq!(jacobian_det(&[p("2*x"), p("2*y")]).unwrap(), p("4"));
        assert_eq!(jacobian_det(&[p("x*y"), p("x^2")]).unwrap(), p("-2*x^2"));
        assert_eq!(hessian(&p("x^2*y")), p("-4*x^2"));
        assert!(jacobian_det(&[p("x")]).is_err());
    }

    #[test]
    fn homogenize_examples() {
        let r = VarSet::unit(&["x", "y", "z"]).unwrap();
        let p = |s: &str| parse(s, &r).unwrap();
        assert_eq!(homogenize(&p("x^2-1"), 2, 2).unwrap(), p("x^2-z^2"));
        assert_eq!(
            homogenize(&p("(x^2+y^2)^2+3*x^2*y-y^3"), 2, 4).unwrap(),
            p("(x^2+y^2)^2+(3*x^2*y-y^3)*z")
        );
        assert!(matches!(
            homogenize(&p("x^3"), 2, 2),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn direct_sum_weights() {
        let rf = VarSet::weighted(&["x", "y"], &[1, 2]).unwrap();
        let rg = VarSet::weighted(&["z"], &[2]).unwrap();
        let s = direct_sum(&parse("x^2*y", &rf).unwrap(), &parse("z^2", &rg).unwrap()).unwrap();
        assert!(s.is_homogeneous());
        assert_eq!(s.degree(), Some(4));
        assert_eq!(s.ring().weights(), &[1, 2, 2]);
        assert!(direct_sum(&parse("x", &rf).unwrap(), &parse("x", &rf).unwrap()).is_err());
    }

    #[test]
    fn linear_substitution() {
        let r = r2();
        let p = |s: &str| parse(s, &r).unwrap();
        let swap = permutation_matrix(&[1, 0]);
        assert_eq!(
            substitute_linear(&p("x^2-y^2"), &swap).unwrap(),
            p("y^2-x^2")
        );
        let shear = vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]];
        assert_eq!(substitute_linear(&p("x*y"), &shear).unwrap(), p("x*y+y^2"));
        let sing = vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]];
        assert!(matches!(
            substitute_linear(&p("x"), &sing),
            Err(Error::SingularMatrix)
        ));
        let rw = VarSet::weighted(&["x", "y"], &[1, 2]).unwrap();
        assert!(matches!(
            substitute_linear(&parse("x", &rw).unwrap(), &swap),
            Err(Error::WeightIncompatible)
        ));
    }
}
