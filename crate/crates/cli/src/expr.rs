//! Multivector expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | blade | '(' expr ')'
//! blade  := 'e' digits? | 'e(' integer (',' integer)* ')'
//! ```
//!
//! `e12` means `e1 e2`; indices above 9 need the `e(10,11)` form. The right
//! operand of `/` must evaluate to a scalar.

use std::fmt;

use cliffchar::{BladeIndex, Multivector, Rational, Signature};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    IndexOutOfRange { index: usize, dim: usize },
    UnorderedBlade,
    DivisionByZero,
    NonScalarDivisor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the source.
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error at {}: {msg}", self.position),
            ParseErrorKind::IndexOutOfRange { index, dim } => write!(
                f,
                "generator index {index} at {} is out of range for n = {dim}",
                self.position
            ),
            ParseErrorKind::UnorderedBlade => write!(
                f,
                "blade indices at {} must be strictly increasing",
                self.position
            ),
            ParseErrorKind::DivisionByZero => write!(f, "division by zero at {}", self.position),
            ParseErrorKind::NonScalarDivisor => {
                write!(f, "divisor at {} is not a scalar", self.position)
            }
        }
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

/// Parse and evaluate `text` in `sig`.
pub fn parse_expression(text: &str, sig: Signature) -> PResult<Multivector> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        sig,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    sig: Signature,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, kind: ParseErrorKind, position: usize) -> ParseError {
        ParseError { kind, position }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.error(ParseErrorKind::Syntax(msg.into()), self.pos)
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected {:?}", c as char)))
        }
    }

    fn expr(&mut self) -> PResult<Multivector> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> PResult<Multivector> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let rhs = self.unary()?;
            if op == b'*' {
                acc = &acc * &rhs;
            } else {
                if !rhs.is_scalar() {
                    return Err(self.error(ParseErrorKind::NonScalarDivisor, at));
                }
                let inv = rhs
                    .scalar_part()
                    .recip()
                    .map_err(|_| self.error(ParseErrorKind::DivisionByZero, at))?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<Multivector> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult<Multivector> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let (k, _) = self.integer()?;
            let k = u32::try_from(k).map_err(|_| self.syntax("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> PResult<(u128, usize)> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<u128>()
            .map(|v| (v, start))
            .map_err(|_| self.error(ParseErrorKind::Syntax("number too large".into()), start))
    }

    fn atom(&mut self) -> PResult<Multivector> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let (v, start) = self.integer()?;
                let v = i128::try_from(v).map_err(|_| {
                    self.error(ParseErrorKind::Syntax("number too large".into()), start)
                })?;
                Ok(Multivector::scalar(self.sig, Rational::from(v)))
            }
            Some(b'e') => self.blade(),
            Some(c) => Err(self.syntax(format!("unexpected {:?}", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn blade(&mut self) -> PResult<Multivector> {
        let start = self.pos;
        self.pos += 1;
        let mut indices: Vec<(usize, usize)> = Vec::new();
        if self.src.get(self.pos) == Some(&b'(') {
            self.pos += 1;
            loop {
                self.skip_ws();
                let (v, at) = self.integer()?;
                indices.push((v.min(usize::MAX as u128) as usize, at));
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.syntax("expected ',' or ')'")),
                }
            }
        } else {
            while let Some(c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
                indices.push(((c - b'0') as usize, self.pos));
                self.pos += 1;
            }
        }
        if self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphabetic() || *c == b'_')
        {
            return Err(self.syntax("unknown identifier"));
        }
        let dim = self.sig.dim();
        for &(index, at) in &indices {
            if index == 0 || index > dim {
                return Err(self.error(ParseErrorKind::IndexOutOfRange { index, dim }, at));
            }
        }
        if indices.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(self.error(ParseErrorKind::UnorderedBlade, start));
        }
        let gens: Vec<usize> = indices.iter().map(|&(i, _)| i).collect();
        let blade = BladeIndex::from_generators(&gens)
            .map_err(|_| self.error(ParseErrorKind::UnorderedBlade, start))?;
        Ok(Multivector::blade(self.sig, blade).expect("indices checked"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn parse(text: &str, s: Signature) -> Multivector {
        parse_expression(text, s).unwrap()
    }

    #[test]
    fn blades_and_sums() {
        let s = sig(5, 0);
        assert_eq!(
            parse("e1 + e5 + e15", s),
            Multivector::from_blades(s, &[&[1], &[5], &[1, 5]]).unwrap()
        );
        assert_eq!(parse("e", s), Multivector::identity(s));
        assert_eq!(parse("e(1,5)", s), parse("e15", s));
    }

    #[test]
    fn rationals_and_precedence() {
        let s = sig(2, 0);
        assert_eq!(parse("2 + 3/2*e12", s).to_string(), "2 + 3/2*e12");
        assert_eq!(parse("(e1+e2)^2", s), Multivector::scalar(s, Rational::from(2)));
        assert_eq!(parse("-e1^2", s), Multivector::scalar(s, Rational::from(-1)));
        assert_eq!(parse("e1*e2 - e12", s), Multivector::zero(s));
        assert_eq!(parse("e2*e1", s).to_string(), "-e12");
        assert_eq!(parse("e1 / (1 + 1)", s).to_string(), "1/2*e1");
        assert_eq!(parse("e12^0", s), Multivector::identity(s));
    }

    #[test]
    fn large_indices() {
        let s = sig(6, 6);
        let v = parse("e(10,12) + e(3)", s);
        assert_eq!(v.terms().count(), 2);
        assert_eq!(v.to_string(), "e3 + e(10,12)");
    }

    #[test]
    fn errors_carry_positions() {
        let s = sig(2, 0);
        let err = |t: &str| parse_expression(t, s).unwrap_err();
        assert_eq!(
            err("e1 + e3").kind,
            ParseErrorKind::IndexOutOfRange { index: 3, dim: 2 }
        );
        assert_eq!(err("e1 + e3").position, 6);
        assert_eq!(err("e21").kind, ParseErrorKind::UnorderedBlade);
        assert_eq!(err("e11").kind, ParseErrorKind::UnorderedBlade);
        assert_eq!(err("e10").kind, ParseErrorKind::IndexOutOfRange { index: 0, dim: 2 });
        assert_eq!(err("1/0").kind, ParseErrorKind::DivisionByZero);
        assert_eq!(err("1/0").position, 2);
        assert_eq!(err("1/e1").kind, ParseErrorKind::NonScalarDivisor);
        assert!(matches!(err("e1 e2").kind, ParseErrorKind::Syntax(_)));
        assert_eq!(err("e1 e2").position, 3);
        assert!(matches!(err("(e1").kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(err("").kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(err("x").kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(err("ex").kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(err("e1^").kind, ParseErrorKind::Syntax(_)));
    }
}
