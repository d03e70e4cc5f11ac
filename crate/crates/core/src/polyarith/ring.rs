//! Variable declarations with positive integer weights.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered variable names with a positive weight each.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
    weights: Vec<u32>,
}

/// Shared handle to a [`VarSet`]; every polynomial carries one.
pub type Ring = Arc<VarSet>;

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarSet {
    pub fn new(names: Vec<String>, weights: Vec<u32>) -> Result<Ring> {
        if names.len() != weights.len() {
            return Err(Error::LengthMismatch {
                expected: names.len(),
                got: weights.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_ident(n) {
                return Err(Error::InvalidRing(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::InvalidRing(format!("weight {w} is not positive")));
        }
        Ok(Arc::new(VarSet { names, weights }))
    }

    /// Unit-weight ring on the given names.
    pub fn unit<S: AsRef<str>>(names: &[S]) -> Result<Ring> {
        Self::new(
            names.iter().map(|s| s.as_ref().to_string()).collect(),
            vec![1; names.len()],
        )
    }

    pub fn weighted<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Ring> {
        Self::new(
            names.iter().map(|s| s.as_ref().to_string()).collect(),
            weights.to_vec(),
        )
    }

    /// Parses the comma separated `--vars` / `--weights` pair used by the CLI.
    pub fn parse(vars: &str, weights: Option<&str>) -> Result<Ring> {
        let names: Vec<String> = vars
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables declared".into()));
        }
        let weights = match weights {
            None => vec![1; names.len()],
            Some(w) => w
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidRing(format!("bad weight `{}`", s.trim())))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Self::new(names, weights)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weight_sum(&self) -> i64 {
        self.weights.iter().map(|&w| w as i64).sum()
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_zero_weights() {
        assert!(VarSet::unit(&["x", "x"]).is_err());
        assert!(VarSet::weighted(&["x", "y"], &[1, 0]).is_err());
        assert!(VarSet::unit(&["1x"]).is_err());
    }

    #[test]
    fn parses_cli_form() {
        let r = VarSet::parse("x, y,z", Some("1,2,2")).unwrap();
        assert_eq!(r.nvars(), 3);
        assert_eq!(r.weights(), &[1, 2, 2]);
        assert!(VarSet::parse("x,y", Some("1")).is_err());
    }
}
