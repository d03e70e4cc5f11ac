//! Sparse vectors of free modules `P^r`, ordered by a [`ModuleOrder`].

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::ModuleOrder;
use crate::polyarith::{Monomial, Polynomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: Rational,
}

/// Terms sorted strictly decreasing under the order of the owning [`Space`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModVec {
    pub terms: Vec<Term>,
}

/// A free module `P^rank` together with a term order.
#[derive(Clone, Debug)]
pub struct Space {
    pub ring: Ring,
    pub order: ModuleOrder,
    pub rank: usize,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Space {
    pub fn new(ring: &Ring, order: ModuleOrder, rank: usize) -> Self {
        Space {
            ring: ring.clone(),
            order,
            rank,
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order
            .cmp((&a.mon, a.comp), (&b.mon, b.comp), self.ring.weights())
    }

    pub fn normalize(&self, mut terms: Vec<Term>) -> ModVec {
        terms.sort_by(|a, b| self.cmp(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mon == t.mon {
                    last.coef += t.coef;
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coef.is_zero());
        ModVec { terms: out }
    }

    /// Vector with the given polynomial entries.
    pub fn from_polys(&self, entries: &[Polynomial]) -> ModVec {
        let mut terms = Vec::new();
        for (c, p) in entries.iter().enumerate() {
            for (m, k) in p.terms() {
                terms.push(Term {
                    mon: m.clone(),
                    comp: c as u32,
                    coef: k.clone(),
                });
            }
        }
        self.normalize(terms)
    }

    pub fn from_poly(&self, p: &Polynomial) -> ModVec {
        self.from_polys(std::slice::from_ref(p))
    }

    /// `p * e_c`.
    pub fn embed(&self, p: &Polynomial, c: usize) -> ModVec {
        let terms = p
            .terms()
            .iter()
            .map(|(m, k)| Term {
                mon: m.clone(),
                comp: c as u32,
                coef: k.clone(),
            })
            .collect();
        self.normalize(terms)
    }

    pub fn basis_vector(&self, c: usize) -> ModVec {
        ModVec {
            terms: vec![Term {
                mon: Monomial::one(self.ring.nvars()),
                comp: c as u32,
                coef: Rational::one(),
            }],
        }
    }

    pub fn to_polys(&self, v: &ModVec) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.rank];
        for t in &v.terms {
            buckets[t.comp as usize].push((t.mon.clone(), t.coef.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(&self.ring, b))
            .collect()
    }

    pub fn to_poly(&self, v: &ModVec) -> Polynomial {
        let terms = v
            .terms
            .iter()
            .map(|t| (t.mon.clone(), t.coef.clone()))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Merges `a + c * m * b` where `b` is sorted; `m` multiplication keeps
    /// order for every monomial order.
    pub fn add_scaled(&self, a: &[Term], c: &Rational, m: &Monomial, b: &[Term]) -> Vec<Term> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut bj: Option<Term> = b.first().map(|t| Term {
            mon: t.mon.mul(m),
            comp: t.comp,
            coef: &t.coef * c,
        });
        while i < a.len() {
            let Some(tb) = bj.take() else { break };
            match self.cmp(&a[i], &tb) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    bj = Some(tb);
                }
                Ordering::Less => {
                    out.push(tb);
                    j += 1;
                    bj = b.get(j).map(|t| Term {
                        mon: t.mon.mul(m),
                        comp: t.comp,
                        coef: &t.coef * c,
                    });
                }
                Ordering::Equal => {
                    let s = &a[i].coef + &tb.coef;
                    if !s.is_zero() {
                        out.push(Term {
                            mon: tb.mon,
                            comp: tb.comp,
                            coef: s,
                        });
                    }
                    i += 1;
                    j += 1;
                    bj = b.get(j).map(|t| Term {
                        mon: t.mon.mul(m),
                        comp: t.comp,
                        coef: &t.coef * c,
                    });
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        if let Some(tb) = bj {
            out.push(tb);
            for t in &b[j + 1..] {
                out.push(Term {
                    mon: t.mon.mul(m),
                    comp: t.comp,
                    coef: &t.coef * c,
                });
            }
        }
        out
    }

    pub fn add(&self, a: &ModVec, b: &ModVec) -> ModVec {
        let one = Monomial::one(self.ring.nvars());
        ModVec {
            terms: self.add_scaled(&a.terms, &Rational::one(), &one, &b.terms),
        }
    }

    pub fn sub(&self, a: &ModVec, b: &ModVec) -> ModVec {
        let one = Monomial::one(self.ring.nvars());
        ModVec {
            terms: self.add_scaled(&a.terms, &-Rational::one(), &one, &b.terms),
        }
    }

    pub fn scale(&self, a: &ModVec, c: &Rational) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.clone(),
                    comp: t.comp,
                    coef: &t.coef * c,
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, a: &ModVec, m: &Monomial, c: &Rational) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.mul(m),
                    comp: t.comp,
                    coef: &t.coef * c,
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, a: &ModVec, p: &Polynomial) -> ModVec {
        let mut acc = ModVec::zero();
        for (m, c) in p.terms() {
            acc = ModVec {
                terms: self.add_scaled(&acc.terms, c, m, &a.terms),
            };
        }
        acc
    }

    pub fn monic(&self, a: &ModVec) -> ModVec {
        match a.lead() {
            None => a.clone(),
            Some(t) => self.scale(a, &t.coef.recip()),
        }
    }

    /// Re-sorts a vector from another space with the same ring and rank.
    pub fn convert(&self, v: &ModVec) -> ModVec {
        self.normalize(v.terms.clone())
    }

    /// Weighted degree of the leading term including the component shift.
    pub fn lead_degree(&self, v: &ModVec) -> Option<i64> {
        v.lead().map(|t| self.term_degree(t))
    }

    pub fn term_degree(&self, t: &Term) -> i64 {
        t.mon.degree(self.ring.weights()) + self.order.shift(t.comp, self.ring.weights())
    }
}
