//! Recursive-descent parser for polynomial expressions over a fixed ring.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := power ('*' power)*
//! power  := unary ('^' integer)?
//! unary  := '-' unary | atom
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Integers are reduced modulo `p` digit by digit, so literals of any length
//! are accepted.

use frobsplit_core::{Polynomial, Ring};
use thiserror::Error;

/// A parse failure at a byte offset of the original input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("NOT_PRIME: {0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },
}

impl ParseError {
    pub fn at(source: &str, offset: usize, kind: ParseErrorKind) -> ParseError {
        let offset = offset.min(source.len());
        let before = &source[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError { offset, line, column, kind }
    }
}

/// Parses `text` as a polynomial in `ring`. `base` is the offset of `text`
/// inside `source`, which is used for error positions.
pub fn parse_polynomial_in(ring: &Ring, source: &str, base: usize, text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser { ring, source, base, bytes: text.as_bytes(), pos: 0 };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.bytes.len() {
        return Err(parser.error(format!("unexpected `{}`", parser.bytes[parser.pos] as char)));
    }
    Ok(poly)
}

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    parse_polynomial_in(ring, text, 0, text)
}

struct Parser<'a> {
    ring: &'a Ring,
    source: &'a str,
    base: usize,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error_kind(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::at(self.source, self.base + self.pos, kind)
    }

    fn error(&self, message: String) -> ParseError {
        self.error_kind(ParseErrorKind::Syntax(message))
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

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.power()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.unary()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected an exponent after `^`".into()));
        }
        let exponent: u32 = digits.parse().map_err(|_| {
            ParseError::at(
                self.source,
                self.base + start,
                ParseErrorKind::Syntax(format!("exponent {digits} is too large")),
            )
        })?;
        base.checked_pow(exponent)
            .map_err(|e| ParseError::at(self.source, self.base + start, ParseErrorKind::Syntax(e.to_string())))
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.atom()
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let field = *self.ring.field();
                let value = self
                    .digits()
                    .bytes()
                    .fold(0u32, |acc, d| field.add(field.mul(acc, field.reduce(10)), field.reduce((d - b'0') as u64)));
                Ok(Polynomial::constant(self.ring, value as u64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii identifier");
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(ParseError::at(
                        self.source,
                        self.base + start,
                        ParseErrorKind::UnknownVariable(name.to_string()),
                    )),
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of expression".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use frobsplit_core::PolyRing;

    fn ring() -> Ring {
        PolyRing::grevlex(7, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_and_prints() {
        let r = ring();
        let f = parse_polynomial(&r, "6*(x^3+y^3+z^3)^6").unwrap();
        assert_eq!(f.total_degree(), Some(18));
        assert_eq!(parse_polynomial(&r, "x*y - -y*x").unwrap().to_string(), "2*x*y");
        assert_eq!(parse_polynomial(&r, " 15 ").unwrap().to_string(), "1");
        assert_eq!(parse_polynomial(&r, "123456789012345678901234567891").unwrap().to_string(), "1");
        assert_eq!(parse_polynomial(&r, "(x+1)^7").unwrap().to_string(), "x^7 + 1");
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        let e = parse_polynomial(&r, "x + w").unwrap_err();
        assert_eq!((e.offset, e.kind), (4, ParseErrorKind::UnknownVariable("w".into())));
        let e = parse_polynomial(&r, "x +\n (y").unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        assert!(parse_polynomial(&r, "x^").is_err());
        assert!(parse_polynomial(&r, "x y").is_err());
        assert!(parse_polynomial(&r, "").is_err());
    }
}
