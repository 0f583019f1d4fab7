//! The `polytext` expression format: a small human-writable syntax for
//! Laurent polynomials, used for CLI arguments and fixture files.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! sign   := "+" | "-"
//! term   := [integer] ("*"? factor)*
//! factor := "t" index ("^" signed-integer)?
//! ```
//!
//! A bare integer is a constant term, an omitted coefficient means 1, an
//! omitted exponent means 1. Variables are always named `t1 … tm`. The
//! printer emits the canonical form: terms in descending lexicographic
//! exponent order, explicit coefficients (except the implied 1), explicit
//! `^` for exponents other than 1. Parsing the printed form returns the
//! original polynomial exactly.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::laurent::{ExponentVector, LaurentPoly};

/// Syntax or range error, with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnexpectedChar(char),
    UnexpectedEnd,
    ExpectedExponent,
    ExpectedVariableIndex,
    IndexOutOfRange { index: u64, max: usize },
    ExponentTooLarge,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::EmptyInput => write!(f, "empty polynomial input"),
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character '{}' at position {}", c, self.pos + 1)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "unexpected end of input at position {}", self.pos + 1)
            }
            ParseErrorKind::ExpectedExponent => {
                write!(f, "expected an exponent after '^' at position {}", self.pos + 1)
            }
            ParseErrorKind::ExpectedVariableIndex => {
                write!(f, "expected a variable index after 't' at position {}", self.pos + 1)
            }
            ParseErrorKind::IndexOutOfRange { index, max } => write!(
                f,
                "variable t{} at position {} is out of range 1..={}",
                index,
                self.pos + 1,
                max
            ),
            ParseErrorKind::ExponentTooLarge => {
                write!(f, "exponent at position {} is too large", self.pos + 1)
            }
        }
    }
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

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos.min(self.bytes.len()),
            kind,
        }
    }

    fn err_here(&mut self) -> ParseError {
        match self.peek() {
            Some(b) => self.err(ParseErrorKind::UnexpectedChar(b as char)),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    /// Reads an unsigned decimal integer (at least one digit).
    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(
                core::str::from_utf8(&self.bytes[start..self.pos])
                    .expect("ascii digits")
                    .into(),
            )
        }
    }
}

/// One parsed monomial: coefficient and (1-based variable index, exponent,
/// byte position of the variable) factors.
struct RawTerm {
    coeff: BigInt,
    factors: Vec<(u64, i64, usize)>,
}

fn parse_factor(cur: &mut Cursor) -> Result<(u64, i64, usize), ParseError> {
    let var_pos = cur.pos;
    match cur.bump() {
        Some(b't') => {}
        _ => unreachable!("caller checked for 't'"),
    }
    let idx: u64 = match cur.digits() {
        Some(d) => d
            .parse()
            .map_err(|_| cur.err(ParseErrorKind::ExpectedVariableIndex))?,
        None => return Err(cur.err(ParseErrorKind::ExpectedVariableIndex)),
    };
    let mut exp: i64 = 1;
    if cur.peek() == Some(b'^') {
        cur.bump();
        let neg = match cur.peek() {
            Some(b'-') => {
                cur.bump();
                true
            }
            Some(b'+') => {
                cur.bump();
                false
            }
            _ => false,
        };
        let digits = cur
            .digits()
            .ok_or_else(|| cur.err(ParseErrorKind::ExpectedExponent))?;
        let mag: i64 = digits
            .parse()
            .map_err(|_| cur.err(ParseErrorKind::ExponentTooLarge))?;
        exp = if neg { -mag } else { mag };
    }
    Ok((idx, exp, var_pos))
}

fn parse_term(cur: &mut Cursor, negative: bool) -> Result<RawTerm, ParseError> {
    let mut coeff = match cur.peek() {
        Some(b) if b.is_ascii_digit() => {
            let digits = cur.digits().expect("digit peeked");
            digits.parse::<BigInt>().expect("decimal digits")
        }
        Some(b't') => BigInt::one(),
        _ => return Err(cur.err_here()),
    };
    if negative {
        coeff = -coeff;
    }
    let mut factors = Vec::new();
    loop {
        match cur.peek() {
            Some(b'*') => {
                cur.bump();
                if cur.peek() != Some(b't') {
                    return Err(cur.err_here());
                }
                factors.push(parse_factor(cur)?);
            }
            Some(b't') => factors.push(parse_factor(cur)?),
            _ => break,
        }
    }
    Ok(RawTerm { coeff, factors })
}

fn parse_raw(text: &str) -> Result<Vec<RawTerm>, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.err(ParseErrorKind::EmptyInput));
    }
    let mut terms = Vec::new();
    let mut negative = match cur.peek() {
        Some(b'-') => {
            cur.bump();
            true
        }
        Some(b'+') => {
            cur.bump();
            false
        }
        _ => false,
    };
    loop {
        terms.push(parse_term(&mut cur, negative)?);
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                negative = false;
            }
            Some(b'-') => {
                cur.bump();
                negative = true;
            }
            Some(_) => return Err(cur.err_here()),
        }
    }
    Ok(terms)
}

fn assemble(terms: Vec<RawTerm>, num_vars: usize) -> Result<LaurentPoly, ParseError> {
    let mut poly = LaurentPoly::zero(num_vars);
    for term in terms {
        let mut exp = ExponentVector::zero(num_vars);
        for (idx, e, pos) in term.factors {
            if idx == 0 || idx as usize > num_vars {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::IndexOutOfRange {
                        index: idx,
                        max: num_vars,
                    },
                });
            }
            exp.0[idx as usize - 1] += e;
        }
        poly.add_term(exp, term.coeff);
    }
    Ok(poly)
}

/// Parses a polynomial in exactly `num_vars` variables `t1 … tm`.
pub fn parse_poly(text: &str, num_vars: usize) -> Result<LaurentPoly, ParseError> {
    assemble(parse_raw(text)?, num_vars)
}

/// Parses a polynomial, inferring the variable count as the largest index
/// used (and at least 1). Returns the polynomial together with the count.
pub fn parse_poly_infer(text: &str) -> Result<(LaurentPoly, usize), ParseError> {
    let terms = parse_raw(text)?;
    let num_vars = terms
        .iter()
        .flat_map(|t| t.factors.iter().map(|&(idx, _, _)| idx as usize))
        .max()
        .unwrap_or(0)
        .max(1);
    Ok((assemble(terms, num_vars)?, num_vars))
}

/// Canonical printed form; `parse_poly(print_poly(p), p.num_vars()) == p`.
pub fn print_poly(p: &LaurentPoly) -> String {
    let mut out = String::new();
    write!(out, "{p}").expect("string write");
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                let mut first = true;
                for (var, &exp) in e.0.iter().enumerate() {
                    if exp == 0 {
                        continue;
                    }
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    if exp == 1 {
                        write!(f, "t{}", var + 1)?;
                    } else {
                        write!(f, "t{}^{}", var + 1, exp)?;
                    }
                }
            }
        }
        Ok(())
    }
}
