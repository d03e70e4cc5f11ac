//! Graded dimension data.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Dimensions of graded pieces on a window of consecutive degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Degree of `values[0]`.
    pub start: i64,
    pub values: Vec<usize>,
    /// True when every piece outside the window is known to vanish.
    pub finite: bool,
}

impl HilbertData {
    pub fn new(start: i64, values: Vec<usize>, finite: bool) -> Self {
        HilbertData {
            start,
            values,
            finite,
        }
    }

    pub fn value(&self, d: i64) -> usize {
        if d < self.start {
            return 0;
        }
        self.values
            .get((d - self.start) as usize)
            .copied()
            .unwrap_or(0)
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    /// Lowest and highest degree with a nonzero value.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = self.values.iter().position(|&v| v > 0)?;
        let hi = self.values.iter().rposition(|&v| v > 0)?;
        Some((self.start + lo as i64, self.start + hi as i64))
    }

    /// `(degree, dimension)` pairs with nonzero dimension.
    pub fn nonzero(&self) -> Vec<(i64, usize)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, &v)| (self.start + i as i64, v))
            .collect()
    }

    /// Whether `dim_d = dim_{s-d}` for all `d`.
    pub fn is_symmetric_about(&self, s: i64) -> bool {
        self.nonzero().iter().all(|&(d, v)| self.value(s - d) == v)
    }

    /// Symmetry about the midpoint of the support.
    pub fn is_symmetric(&self) -> bool {
        match self.support() {
            None => true,
            Some((lo, hi)) => self.is_symmetric_about(lo + hi),
        }
    }

    /// Shifts all degrees by `k`.
    pub fn shifted(&self, k: i64) -> HilbertData {
        HilbertData {
            start: self.start + k,
            values: self.values.clone(),
            finite: self.finite,
        }
    }

    /// Same data on exactly `[lo, hi]`.
    pub fn window(&self, lo: i64, hi: i64) -> HilbertData {
        HilbertData {
            start: lo,
            values: (lo..=hi).map(|d| self.value(d)).collect(),
            finite: self.finite,
        }
    }

    /// Agreement on the common window.
    pub fn agrees_with(&self, other: &HilbertData) -> bool {
        let lo = self.start.max(other.start);
        let hi = self.end().min(other.end());
        (lo..=hi).all(|d| self.value(d) == other.value(d))
    }
}

/// Poincaré polynomial notation, e.g. `2t^5+3t^6+2t^7`; `0` when empty.
impl fmt::Display for HilbertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero();
        if nz.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, v)) in nz.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            match (*v, *d) {
                (v, 0) => write!(f, "{v}")?,
                (1, 1) => write!(f, "t")?,
                (v, 1) => write!(f, "{v}t")?,
                (1, d) => write!(f, "t^{d}")?,
                (v, d) => write!(f, "{v}t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_and_symmetry() {
        let h = HilbertData::new(4, vec![0, 2, 3, 2], true);
        assert_eq!(h.to_string(), "2t^5+3t^6+2t^7");
        assert!(h.is_symmetric_about(12));
        assert!(h.is_symmetric());
        let q = HilbertData::new(4, vec![6, 13, 15, 9], true);
        assert!(!q.is_symmetric());
        assert_eq!(HilbertData::new(0, vec![1, 1], false).to_string(), "1+t");
    }
}
