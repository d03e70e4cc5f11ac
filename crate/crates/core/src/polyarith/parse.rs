//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := rational | var | '(' expr ')'
//! ```
//!
//! A leading sign is accepted in front of any term. Juxtaposition (`2x`,
//! `x y`) is rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Polynomial, Rational};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Largest exponent accepted by the parser; keeps hostile input bounded.
pub const MAX_EXPONENT: u32 = 1000;

/// Largest total degree a parsed expression may reach.
const MAX_DEGREE: i64 = 4000;

/// Cap on intermediate expansion size.
const MAX_WORK: usize = 200_000;

/// Upper bound for the number of monomials of degree at most `d` in `k`
/// variables, saturating at `usize::MAX`.
fn expansion_bound(k: usize, d: i64) -> usize {
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (d as u128 + i) / i;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Parses `text` into a polynomial over `ring`.
pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
        depth: 0,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a `;`-separated list of polynomials.
pub fn parse_list(text: &str, ring: &Ring) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(';') {
        if piece.trim().is_empty() {
            offset += piece.len() + 1;
            continue;
        }
        out.push(parse(piece, ring).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos: pos + offset,
                msg,
            },
            other => other,
        })?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
    depth: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn check_degree(&self, p: &Polynomial) -> Result<()> {
        match p.degree() {
            Some(d) if d > MAX_DEGREE => Err(self.err("polynomial degree too large")),
            _ => Ok(()),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.depth += 1;
        if self.depth > 200 {
            return Err(self.err("expression nested too deeply"));
        }
        let mut acc = self.signed_term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn signed_term(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'-') => negate = !negate,
                Some(b'+') => {}
                _ => break,
            }
            self.pos += 1;
        }
        let t = self.term()?;
        Ok(if negate { -t } else { t })
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                let f = self.factor()?;
                if acc.num_terms().saturating_mul(f.num_terms()) > MAX_WORK {
                    return Err(self.err("product too large to expand"));
                }
                acc = &acc * &f;
                self.check_degree(&acc)?;
            } else {
                self.reject_juxtaposition()?;
                break;
            }
        }
        Ok(acc)
    }

    fn reject_juxtaposition(&self) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                Err(self.err("implicit multiplication is not allowed; use `*`"))
            }
            _ => Ok(()),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let n = self.digits()?;
            let e: u32 = n
                .parse()
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| Error::Parse {
                    pos: start,
                    msg: format!("exponent must be at most {MAX_EXPONENT}"),
                })?;
            if let Some(d) = base.degree() {
                if d.saturating_mul(e as i64) > MAX_DEGREE {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "polynomial degree too large".into(),
                    });
                }
            }
            if base.num_terms() > 1
                && expansion_bound(
                    base.support_vars().len(),
                    base.degree().unwrap_or(0) * e as i64,
                ) > MAX_WORK
            {
                return Err(Error::Parse {
                    pos: start,
                    msg: "power of a sum is too large to expand".into(),
                });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        // Only ASCII digits were consumed.
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().unwrap();
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let dpos = self.pos;
                    let den: BigInt = self.digits()?.parse().unwrap();
                    if den.is_zero() {
                        return Err(Error::Parse {
                            pos: dpos,
                            msg: "division by zero".into(),
                        });
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::ring::VarSet;

    fn ring() -> Ring {
        VarSet::unit(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn quartic_term_count() {
        let p = parse("(x^2+y^2)^2 + 3*x^2*y - y^3", &ring()).unwrap();
        assert_eq!(p.num_terms(), 5);
        let p = parse("(x^2+y^2)^2 + 3*x^2*y - y^3 + 1", &ring()).unwrap();
        assert_eq!(p.num_terms(), 6);
    }

    #[test]
    fn zero_and_identity() {
        assert!(parse("0", &ring()).unwrap().is_zero());
        assert!(parse("(x+y)^3 - x^3 - y^3 - 3*x*y*(x+y)", &ring())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn errors_carry_position() {
        match parse("x + * y", &ring()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("2x", &ring()),
            Err(Error::Parse { pos: 1, .. })
        ));
        assert!(matches!(parse("x + w", &ring()), Err(Error::UnknownVariable(v)) if v == "w"));
        assert!(matches!(parse("(x", &ring()), Err(Error::Parse { .. })));
        assert!(matches!(parse("1/0", &ring()), Err(Error::Parse { .. })));
    }

    #[test]
    fn rationals_and_signs() {
        let p = parse("-3/6*x - -y", &ring()).unwrap();
        assert_eq!(p.to_string(), "-1/2*x + y");
    }

    #[test]
    fn print_parse_roundtrip() {
        let r = ring();
        for s in ["x^2*y - 3/2*x*z + 1", "-x + y^7*z", "5", "0"] {
            let p = parse(s, &r).unwrap();
            assert_eq!(parse(&p.to_string(), &r).unwrap(), p);
        }
    }
}
