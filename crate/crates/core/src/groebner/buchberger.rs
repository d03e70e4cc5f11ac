//! Buchberger's algorithm with the sugar strategy and the Gebauer–Möller
//! pair criteria, for ideals and submodules of free modules.

use std::cmp::Ordering;

use super::modvec::{ModVec, Space, Term};
use crate::error::{Error, Result};
use crate::polyarith::{Monomial, Polynomial, Rational};

/// Options for [`groebner_basis`].
#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Keep, for every basis element, its expression in the input generators.
    pub track: bool,
    /// Abort with [`Error::DegreeCap`] when a pair of larger sugar is selected.
    pub degree_cap: Option<i64>,
}

/// A reduced Gröbner basis, sorted by increasing leading term.
#[derive(Clone, Debug)]
pub struct GbResult {
    pub basis: Vec<ModVec>,
    /// `basis[k] = sum_l cofactors[k][l] * gens[l]` when tracking was requested.
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
}

fn find_divisor(t: &Term, basis: &[&ModVec]) -> Option<usize> {
    basis.iter().position(|g| {
        let l = &g.terms[0];
        l.comp == t.comp && l.mon.divides(&t.mon)
    })
}

/// Division of `f` by `basis`. With `full` every term is reduced, otherwise
/// only the leading term is. Quotient terms are appended to `quotients`
/// when given (one bucket per basis element).
pub fn reduce(
    space: &Space,
    f: &ModVec,
    basis: &[&ModVec],
    full: bool,
    mut quotients: Option<&mut Vec<Vec<(Monomial, Rational)>>>,
) -> ModVec {
    let mut terms = f.terms.clone();
    let mut pos = 0;
    while pos < terms.len() {
        let t = &terms[pos];
        match find_divisor(t, basis) {
            Some(k) => {
                let g = basis[k];
                let lt = &g.terms[0];
                let q = lt.mon.quotient_of(&t.mon).expect("divisor");
                let c = &t.coef / &lt.coef;
                let tail = terms.split_off(pos + 1);
                terms.pop();
                let merged = space.add_scaled(&tail, &-c.clone(), &q, &g.terms[1..]);
                terms.extend(merged);
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[k].push((q, c));
                }
            }
            None => {
                if !full {
                    break;
                }
                pos += 1;
            }
        }
    }
    ModVec { terms }
}

struct Elem {
    v: ModVec,
    sugar: i64,
    active: bool,
    cof: Option<Vec<Polynomial>>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: i64,
}

fn combine_cofactors(acc: &mut [Polynomial], other: &[Polynomial], m: &Monomial, c: &Rational) {
    for (a, o) in acc.iter_mut().zip(other) {
        if !o.is_zero() {
            *a = &*a + &o.mul_term(m, c);
        }
    }
}

fn apply_quotients(
    cof: &mut [Polynomial],
    quotients: &[Vec<(Monomial, Rational)>],
    reducers: &[usize],
    elems: &[Elem],
    ring: &crate::polyarith::Ring,
) {
    for (k, bucket) in quotients.iter().enumerate() {
        if bucket.is_empty() {
            continue;
        }
        let q = Polynomial::from_terms(ring, bucket.clone());
        let other = elems[reducers[k]].cof.as_ref().expect("tracked");
        for (a, o) in cof.iter_mut().zip(other) {
            if !o.is_zero() {
                *a = &*a - &(&q * o);
            }
        }
    }
}

/// Computes the reduced Gröbner basis of the submodule spanned by `gens`.
pub fn groebner_basis(space: &Space, gens: &[ModVec], opts: &GbOptions) -> Result<GbResult> {
    let ring = &space.ring;
    let ngens = gens.len();
    let rank1 = space.rank == 1;
    let mut elems: Vec<Elem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<(ModVec, Option<Vec<Polynomial>>)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(l, g)| {
            let cof = opts.track.then(|| {
                let mut c = vec![Polynomial::zero(ring); ngens];
                c[l] = Polynomial::one(ring);
                c
            });
            (g.clone(), cof)
        })
        .collect();
    // Smallest leading terms first keeps early reductions cheap.
    inputs.sort_by(|a, b| space.cmp(&a.0.terms[0], &b.0.terms[0]));

    let sugar_of = |v: &ModVec| {
        v.terms
            .iter()
            .map(|t| space.term_degree(t))
            .max()
            .unwrap_or(0)
    };

    for (v, cof) in inputs {
        let mut cof = cof;
        let active: Vec<usize> = (0..elems.len()).filter(|&k| elems[k].active).collect();
        let reducers: Vec<&ModVec> = active.iter().map(|&k| &elems[k].v).collect();
        let mut qs = opts.track.then(|| vec![Vec::new(); reducers.len()]);
        let r = reduce(space, &v, &reducers, false, qs.as_mut());
        if r.is_zero() {
            continue;
        }
        if let (Some(c), Some(q)) = (cof.as_mut(), qs.as_ref()) {
            apply_quotients(c, q, &active, &elems, ring);
        }
        let sugar = sugar_of(&v);
        insert(space, &mut elems, &mut pairs, r, sugar, cof, rank1);
    }

    while !pairs.is_empty() {
        let best = select_pair(space, &pairs);
        let p = pairs.swap_remove(best);
        if let Some(cap) = opts.degree_cap {
            if p.sugar > cap {
                return Err(Error::DegreeCap(cap));
            }
        }
        let (gi, gj) = (&elems[p.i], &elems[p.j]);
        let li = &gi.v.terms[0];
        let lj = &gj.v.terms[0];
        let mi = li.mon.quotient_of(&p.lcm).unwrap();
        let mj = lj.mon.quotient_of(&p.lcm).unwrap();
        let ci = li.coef.recip();
        let cj = -lj.coef.recip();
        let a = space.mul_term(&gi.v, &mi, &ci);
        let s = ModVec {
            terms: space.add_scaled(&a.terms, &cj, &mj, &gj.v.terms),
        };
        let mut cof = None;
        if opts.track {
            let mut c = vec![Polynomial::zero(ring); ngens];
            combine_cofactors(&mut c, gi.cof.as_ref().unwrap(), &mi, &ci);
            combine_cofactors(&mut c, gj.cof.as_ref().unwrap(), &mj, &cj);
            cof = Some(c);
        }
        let active: Vec<usize> = (0..elems.len()).filter(|&k| elems[k].active).collect();
        let reducers: Vec<&ModVec> = active.iter().map(|&k| &elems[k].v).collect();
        let mut qs = opts.track.then(|| vec![Vec::new(); reducers.len()]);
        let r = reduce(space, &s, &reducers, false, qs.as_mut());
        if r.is_zero() {
            continue;
        }
        if let (Some(c), Some(q)) = (cof.as_mut(), qs.as_ref()) {
            apply_quotients(c, q, &active, &elems, ring);
        }
        insert(space, &mut elems, &mut pairs, r, p.sugar, cof, rank1);
    }

    interreduce(space, elems, opts.track)
}

fn select_pair(space: &Space, pairs: &[Pair]) -> usize {
    let w = space.ring.weights();
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let o = a
            .sugar
            .cmp(&b.sugar)
            .then_with(|| space.order.cmp((&a.lcm, a.comp), (&b.lcm, b.comp), w))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
        if o == Ordering::Less {
            best = k;
        }
    }
    best
}

fn insert(
    space: &Space,
    elems: &mut Vec<Elem>,
    pairs: &mut Vec<Pair>,
    v: ModVec,
    sugar: i64,
    cof: Option<Vec<Polynomial>>,
    rank1: bool,
) {
    let w = space.ring.weights();
    let h = elems.len();
    let lt_h = v.terms[0].mon.clone();
    let comp = v.terms[0].comp;

    // Candidate pairs (g, h).
    struct Cand {
        g: usize,
        lcm: Monomial,
        coprime: bool,
        sugar: i64,
    }
    let mut cands: Vec<Cand> = Vec::new();
    for (g, e) in elems.iter().enumerate() {
        if !e.active || e.v.terms[0].comp != comp {
            continue;
        }
        let lt_g = &e.v.terms[0].mon;
        let lcm = lt_g.lcm(&lt_h);
        let dg = lt_g.quotient_of(&lcm).unwrap().degree(w);
        let dh = lt_h.quotient_of(&lcm).unwrap().degree(w);
        cands.push(Cand {
            g,
            coprime: rank1 && lt_g.is_coprime(&lt_h),
            sugar: (e.sugar + dg).max(sugar + dh),
            lcm,
        });
    }

    // Criterion M: drop pairs whose lcm is a proper multiple of another's.
    let keep: Vec<bool> = cands
        .iter()
        .map(|c| {
            !cands
                .iter()
                .any(|d| d.lcm != c.lcm && d.lcm.divides(&c.lcm))
        })
        .collect();
    let cands: Vec<Cand> = cands
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect();
    // Criterion F: one pair per lcm; product criterion kills the whole class.
    let mut chosen: Vec<Cand> = Vec::new();
    let mut seen: Vec<(Monomial, bool)> = Vec::new();
    for c in &cands {
        if seen.iter().any(|(l, _)| *l == c.lcm) {
            continue;
        }
        let any_coprime = cands.iter().any(|d| d.lcm == c.lcm && d.coprime);
        seen.push((c.lcm.clone(), any_coprime));
        if !any_coprime {
            chosen.push(Cand {
                g: c.g,
                lcm: c.lcm.clone(),
                coprime: false,
                sugar: c.sugar,
            });
        }
    }

    // Criterion B on old pairs.
    pairs.retain(|p| {
        if p.comp != comp || !lt_h.divides(&p.lcm) {
            return true;
        }
        let li = elems[p.i].v.terms[0].mon.lcm(&lt_h);
        let lj = elems[p.j].v.terms[0].mon.lcm(&lt_h);
        li == p.lcm || lj == p.lcm
    });

    for e in elems.iter_mut() {
        if e.active && e.v.terms[0].comp == comp && lt_h.divides(&e.v.terms[0].mon) {
            e.active = false;
        }
    }
    elems.push(Elem {
        v,
        sugar,
        active: true,
        cof,
    });
    for c in chosen {
        pairs.push(Pair {
            i: c.g,
            j: h,
            lcm: c.lcm,
            comp,
            sugar: c.sugar,
        });
    }
}

fn interreduce(space: &Space, elems: Vec<Elem>, track: bool) -> Result<GbResult> {
    let ring = &space.ring;
    let mut act: Vec<Elem> = elems.into_iter().filter(|e| e.active).collect();
    act.sort_by(|a, b| space.cmp(&a.v.terms[0], &b.v.terms[0]));
    let n = act.len();
    let mut out_v: Vec<ModVec> = Vec::with_capacity(n);
    let mut out_c: Vec<Vec<Polynomial>> = Vec::new();
    for k in 0..n {
        let others: Vec<usize> = (0..n).filter(|&j| j != k).collect();
        let reducers: Vec<&ModVec> = others.iter().map(|&j| &act[j].v).collect();
        let mut qs = track.then(|| vec![Vec::new(); reducers.len()]);
        let r = reduce(space, &act[k].v, &reducers, true, qs.as_mut());
        let inv = r.terms[0].coef.recip();
        let r = space.scale(&r, &inv);
        if track {
            let mut c = act[k].cof.clone().unwrap();
            apply_quotients(&mut c, qs.as_ref().unwrap(), &others, &act, ring);
            for p in c.iter_mut() {
                *p = p.scale(&inv);
            }
            out_c.push(c);
        }
        out_v.push(r);
    }
    Ok(GbResult {
        basis: out_v,
        cofactors: track.then_some(out_c),
    })
}

/// Convenience: reduce with respect to a basis given by value.
pub fn normal_form_vec(space: &Space, f: &ModVec, basis: &[ModVec]) -> ModVec {
    let refs: Vec<&ModVec> = basis.iter().collect();
    reduce(space, f, &refs, true, None)
}

/// Full division returning quotient polynomials per basis element.
pub fn divide(space: &Space, f: &ModVec, basis: &[ModVec]) -> (Vec<Polynomial>, ModVec) {
    let refs: Vec<&ModVec> = basis.iter().collect();
    let mut qs = vec![Vec::new(); basis.len()];
    let r = reduce(space, f, &refs, true, Some(&mut qs));
    let q = qs
        .into_iter()
        .map(|b| Polynomial::from_terms(&space.ring, b))
        .collect();
    (q, r)
}
