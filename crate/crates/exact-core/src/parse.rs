//! Text grammar for homogeneous polynomials (ASCII):
//!
//! ```text
//! poly      := term (('+'|'-') term)*
//! term      := [sign][rational '*'] var_power ('*' var_power)*
//! var_power := ('x'|'y'|'z')['^' uint]
//! rational  := int['/' uint]
//! ```
//!
//! Whitespace is allowed between tokens.  The parsed sum must be
//! homogeneous; mixed degrees are rejected with the detected degree set.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::{CoreError, HomogeneousPolynomial, Monomial, Rational};

/// Syntax error with byte position context.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, message: &str) -> ParseError {
        ParseError {
            message: message.to_string(),
            position: self.pos,
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    /// `int['/' uint]`, sign already consumed by the caller.
    fn parse_rational(&mut self) -> Result<Rational, ParseError> {
        let numerator = self.parse_uint()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let denominator = self.parse_uint()?;
            if denominator == BigInt::from(0) {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(numerator, denominator))
        } else {
            Ok(Rational::from_integer(numerator))
        }
    }

    /// `('x'|'y'|'z')['^' uint]` -> (variable index, exponent)
    fn parse_var_power(&mut self) -> Result<(usize, u32), ParseError> {
        let var = match self.bump() {
            Some(b'x') => 0,
            Some(b'y') => 1,
            Some(b'z') => 2,
            _ => return Err(self.err("expected variable x, y, or z")),
        };
        let exp = if self.peek() == Some(b'^') {
            self.bump();
            let e = self.parse_uint()?;
            e.to_u32().ok_or_else(|| self.err("exponent too large"))?
        } else {
            1
        };
        Ok((var, exp))
    }

    /// One term: optional sign, optional leading rational, variable powers.
    fn parse_term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let mut coeff = Rational::one();
        if let Some(sign) = self.peek() {
            if sign == b'-' {
                self.bump();
                coeff = -coeff;
            } else if sign == b'+' {
                self.bump();
            }
        }
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                coeff *= self.parse_rational()?;
                match self.peek() {
                    Some(b'*') => {
                        self.bump();
                    }
                    // bare rational: a degree-zero term
                    _ => return Ok((Monomial::new(0, 0, 0), coeff)),
                }
            }
            _ => {}
        }
        let mut exps = [0u32; 3];
        let (v, e) = self.parse_var_power()?;
        exps[v] += e;
        while self.peek() == Some(b'*') {
            self.bump();
            let (v, e) = self.parse_var_power()?;
            exps[v] += e;
        }
        Ok((Monomial::new(exps[0], exps[1], exps[2]), coeff))
    }
}

/// Parse a homogeneous polynomial from the text grammar.
pub fn parse_polynomial(text: &str) -> Result<HomogeneousPolynomial, CoreError> {
    let mut cursor = Cursor::new(text);
    let mut terms = Vec::new();
    terms.push(cursor.parse_term().map_err(CoreError::Parse)?);
    loop {
        match cursor.peek() {
            None => break,
            Some(b'+') | Some(b'-') => {
                terms.push(cursor.parse_term().map_err(CoreError::Parse)?);
            }
            Some(_) => {
                return Err(CoreError::Parse(cursor.err("unexpected trailing input")));
            }
        }
    }
    HomogeneousPolynomial::from_terms(terms)
}
