//! Polynomial literals such as `3X^(5/6)-X^(1/2)+7`.
//!
//! Whitespace is ignored. A term is a coefficient `a` or `a/b`, optionally
//! followed by `*`, then `X` with an optional exponent `^k` or `^(a/b)`.
//! Terms are joined by `+` and `-`; a leading sign is allowed.

use facta::{CoeffRing, PolyExpr, PuiseuxMonoid, Rat};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

struct Scanner {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Scanner {
            chars,
            at: 0,
            len: text.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(i, _)| i)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.position(),
            expected: expected.to_string(),
            found: match self.peek() {
                Some(c) => format!("{c:?}"),
                None => "end of input".into(),
            },
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("{c:?}"))
        }
    }

    fn digits(&mut self) -> Result<BigUint, ParseError> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        if start == self.at {
            return self.fail("a digit");
        }
        let s: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        Ok(s.parse().expect("ascii digits"))
    }

    // a or a/b
    fn fraction(&mut self) -> Result<(BigUint, BigUint), ParseError> {
        let n = self.digits()?;
        if self.eat('/') {
            let at = self.position();
            let d = self.digits()?;
            if d.is_zero() {
                return Err(ParseError {
                    position: at,
                    expected: "a nonzero denominator".into(),
                    found: "0".into(),
                });
            }
            Ok((n, d))
        } else {
            Ok((n, BigUint::one()))
        }
    }

    fn exponent(&mut self) -> Result<Rat, ParseError> {
        if !self.eat('^') {
            return Ok(Rat::one());
        }
        if self.eat('(') {
            let (n, d) = self.fraction()?;
            self.expect(')')?;
            Ok(Rat::new(n, d).expect("nonzero denominator"))
        } else if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            Ok(Rat::integer(self.digits()?))
        } else {
            self.fail("an integer or a parenthesized exponent")
        }
    }

    fn term(&mut self, negative: bool) -> Result<(Rat, BigRational), ParseError> {
        let mut coeff = BigRational::one();
        let mut has_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let (n, d) = self.fraction()?;
            coeff = BigRational::new(BigInt::from(n), BigInt::from(d));
            has_coeff = true;
            if self.eat('*') && self.peek() != Some('X') {
                return self.fail("'X'");
            }
        }
        let exp = if self.eat('X') {
            self.exponent()?
        } else if has_coeff {
            Rat::zero()
        } else {
            return self.fail("a coefficient or 'X'");
        };
        Ok((exp, if negative { -coeff } else { coeff }))
    }
}

/// Raw `(exponent, coefficient)` terms of a literal, before canonicalization.
pub fn parse_terms(text: &str) -> Result<Vec<(Rat, BigRational)>, ParseError> {
    let mut s = Scanner::new(text);
    let mut terms = Vec::new();
    let mut negative = if s.eat('-') {
        true
    } else {
        s.eat('+');
        false
    };
    loop {
        terms.push(s.term(negative)?);
        if s.eat('+') {
            negative = false;
        } else if s.eat('-') {
            negative = true;
        } else if s.peek().is_none() {
            return Ok(terms);
        } else {
            return s.fail("'+', '-' or end of input");
        }
    }
}

/// Parses a literal into a canonical expression over `ring` with exponents
/// in `monoid`.
pub fn parse_poly(text: &str, ring: CoeffRing, monoid: &PuiseuxMonoid) -> Result<PolyExpr, CliError> {
    let terms = parse_terms(text)?;
    Ok(PolyExpr::new(ring, monoid.clone(), terms)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> PuiseuxMonoid {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_examples() {
        let f = parse_poly("3X^(5/6)-X^(1/2)+7", CoeffRing::Int, &m("grid:6")).unwrap();
        assert_eq!(f.to_string(), "3X^(5/6)-X^(1/2)+7");
        let g = parse_poly("X^(1/2)+X^(1/2)", CoeffRing::Int, &m("grid:2")).unwrap();
        assert_eq!(g.to_string(), "2X^(1/2)");
    }

    #[test]
    fn domain_errors() {
        let e = parse_poly("X^(1/5)", CoeffRing::Int, &m("grid:6")).unwrap_err();
        assert!(matches!(e, CliError::Library(facta::Error::NotInMonoid { .. })));
        let e = parse_poly("1/2X", CoeffRing::Int, &m("grid:1")).unwrap_err();
        assert!(matches!(e, CliError::Library(facta::Error::CoefficientNotInRing { .. })));
    }

    #[test]
    fn syntax_errors_report_position() {
        let e = parse_terms("X^1/2").unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_terms("3X^(1/2").unwrap_err();
        assert_eq!(e.position, 7);
        assert_eq!(e.found, "end of input");
        assert!(parse_terms("").is_err());
        assert!(parse_terms("X++1").is_err());
        assert!(parse_terms("1/0X").is_err());
    }

    #[test]
    fn forms() {
        let f = parse_poly(" - 2 * X^3 + 1/2X - 5 ", CoeffRing::Rational, &m("grid:1")).unwrap();
        assert_eq!(f.to_string(), "-2X^3+1/2X-5");
        let z = parse_poly("X - X", CoeffRing::Int, &m("grid:1")).unwrap();
        assert!(z.is_zero());
        assert_eq!(parse_poly("0", CoeffRing::Int, &m("grid:1")).unwrap(), z);
        let h = parse_poly("-X^(1/2)+3", CoeffRing::prime_field(2).unwrap(), &m("ppow:2")).unwrap();
        assert_eq!(h.to_string(), "X^(1/2)+1");
    }
}
