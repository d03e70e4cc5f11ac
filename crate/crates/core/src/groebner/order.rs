//! Monomial orders on polynomial rings and on free modules.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::polyarith::Monomial;

/// A global monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoOrder {
    /// Graded reverse lexicographic with respect to the ring weights.
    Grevlex,
    Lex,
    /// Product of grevlex orders on consecutive blocks of the given sizes;
    /// eliminates the earlier blocks.
    Elimination(Vec<usize>),
    /// Grevlex refined by an explicit positive weight vector.
    WeightedGrevlex(Vec<u32>),
}

impl MonoOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match self {
            MonoOrder::Grevlex => a.cmp_grevlex(b, weights),
            MonoOrder::Lex => a.cmp_lex(b),
            MonoOrder::WeightedGrevlex(w) => a.cmp_grevlex(b, w),
            MonoOrder::Elimination(blocks) => {
                let mut start = 0;
                for &len in blocks {
                    let end = (start + len).min(a.nvars());
                    let ea = Monomial::from_exponents(&a.exponents()[start..end]);
                    let eb = Monomial::from_exponents(&b.exponents()[start..end]);
                    let o = ea.cmp_grevlex(&eb, &weights[start..end]);
                    if o != Ordering::Equal {
                        return o;
                    }
                    start = end;
                }
                if start < a.nvars() {
                    let ea = Monomial::from_exponents(&a.exponents()[start..]);
                    let eb = Monomial::from_exponents(&b.exponents()[start..]);
                    return ea.cmp_grevlex(&eb, &weights[start..]);
                }
                Ordering::Equal
            }
        }
    }

    /// Whether every monomial comparison is preceded by the ring-weighted degree.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonoOrder::Grevlex)
    }
}

/// An order on terms `m * e_c` of a free module. Lower component indices are
/// larger whenever position decides.
#[derive(Clone, Debug)]
pub enum ModuleOrder {
    /// Term over position: shifted degree, then monomial, then position.
    Top { mono: MonoOrder, shifts: Vec<i64> },
    /// Position over term.
    Pot { mono: MonoOrder },
    /// Order induced by the leading terms `(m_i, c_i)` of a list of module
    /// elements under `base`: `m e_i > n e_j` iff `m m_i e_{c_i} > n m_j e_{c_j}`,
    /// ties broken by `i < j`.
    Schreyer {
        base: Arc<ModuleOrder>,
        leads: Arc<Vec<(Monomial, u32)>>,
    },
}

impl ModuleOrder {
    pub fn top(rank: usize) -> Self {
        ModuleOrder::Top {
            mono: MonoOrder::Grevlex,
            shifts: vec![0; rank],
        }
    }

    pub fn polynomial(mono: MonoOrder) -> Self {
        ModuleOrder::Top {
            mono,
            shifts: vec![0],
        }
    }

    pub fn cmp(&self, a: (&Monomial, u32), b: (&Monomial, u32), weights: &[u32]) -> Ordering {
        match self {
            ModuleOrder::Top { mono, shifts } => {
                if mono.is_degree_compatible() {
                    let da = a.0.degree(weights) + shifts.get(a.1 as usize).copied().unwrap_or(0);
                    let db = b.0.degree(weights) + shifts.get(b.1 as usize).copied().unwrap_or(0);
                    da.cmp(&db)
                        .then_with(|| a.0.cmp_revlex_tail(b.0))
                        .then_with(|| b.1.cmp(&a.1))
                } else {
                    mono.cmp(a.0, b.0, weights).then_with(|| b.1.cmp(&a.1))
                }
            }
            ModuleOrder::Pot { mono } => b.1.cmp(&a.1).then_with(|| mono.cmp(a.0, b.0, weights)),
            ModuleOrder::Schreyer { base, leads } => {
                let (ma, ca) = &leads[a.1 as usize];
                let (mb, cb) = &leads[b.1 as usize];
                let pa = a.0.mul(ma);
                let pb = b.0.mul(mb);
                base.cmp((&pa, *ca), (&pb, *cb), weights)
                    .then_with(|| b.1.cmp(&a.1))
            }
        }
    }

    /// Degree shift of component `c` for graded bookkeeping, when defined.
    pub fn shift(&self, c: u32, weights: &[u32]) -> i64 {
        match self {
            ModuleOrder::Top { shifts, .. } => shifts.get(c as usize).copied().unwrap_or(0),
            ModuleOrder::Pot { .. } => 0,
            ModuleOrder::Schreyer { base, leads } => {
                let (m, cc) = &leads[c as usize];
                m.degree(weights) + base.shift(*cc, weights)
            }
        }
    }
}
