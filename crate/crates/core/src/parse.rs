//! Text grammar shared by element, skew-polynomial and series literals.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power (['*'] power)*
//! power  := atom ['^' digits]
//! atom   := digits | letter | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies (`2t`, `(u+1)F`). What a letter means, and how
//! products are formed, is decided by the [`Algebra`] being parsed into; the
//! skew-polynomial algebra multiplies non-commutatively, so `F*u` is
//! rewritten to left-coefficient form exactly.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::DensePoly;
use crate::ring::Ring;

/// A syntax or evaluation error in a literal. Columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Start of the construct that failed.
    pub column: usize,
    /// Exact position of the offending character.
    pub found_column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at column {}: {}",
            self.column, self.message
        )?;
        if self.found_column != self.column {
            write!(f, " (offending character at column {})", self.found_column)?;
        }
        Ok(())
    }
}

impl ParseError {
    fn at(column: usize, found_column: usize, message: impl Into<String>) -> Self {
        ParseError {
            column,
            found_column,
            message: message.into(),
        }
    }

    /// Moves both columns right by `offset`, for a literal embedded in a
    /// longer line.
    pub fn shifted(mut self, offset: usize) -> Self {
        self.column += offset;
        self.found_column += offset;
        self
    }
}

/// Target of the parser: how atoms are interpreted and combined.
pub trait Algebra {
    type Value: Clone;
    fn integer(&self, n: &BigInt) -> Result<Self::Value, String>;
    /// `None` marks an unknown variable.
    fn variable(&self, name: char) -> Option<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn neg(&self, a: Self::Value) -> Result<Self::Value, String>;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Result<Self::Value, String>;
    fn pow(&self, a: Self::Value, e: u64) -> Result<Self::Value, String>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Var(c) => format!("'{c}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Num(s.parse().unwrap()), col));
                continue;
            }
            c if c.is_ascii_alphabetic() => out.push((Tok::Var(c), col)),
            '+' => out.push((Tok::Plus, col)),
            '-' | '\u{2212}' => out.push((Tok::Minus, col)),
            '*' | '\u{b7}' => out.push((Tok::Star, col)),
            '^' => out.push((Tok::Caret, col)),
            '(' => out.push((Tok::LParen, col)),
            ')' => out.push((Tok::RParen, col)),
            other => {
                return Err(ParseError::at(
                    col,
                    col,
                    format!("unexpected character '{other}'"),
                ))
            }
        }
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a, A: Algebra> {
    alg: &'a A,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<A: Algebra> Parser<'_, A> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn lift<T>(&self, r: Result<T, String>, col: usize) -> Result<T, ParseError> {
        r.map_err(|m| ParseError::at(col, col, m))
    }

    fn expr(&mut self) -> Result<A::Value, ParseError> {
        let start = self.col();
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = self.lift(self.alg.neg(acc), start)?;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    let c = self.bump().1;
                    let t = self.term()?;
                    acc = self.lift(self.alg.add(acc, t), c)?;
                }
                Tok::Minus => {
                    let c = self.bump().1;
                    let t = self.term()?;
                    acc = self.lift(self.alg.sub(acc, t), c)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A::Value, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    let c = self.bump().1;
                    let f = self.power()?;
                    acc = self.lift(self.alg.mul(acc, f), c)?;
                }
                Tok::Num(_) | Tok::Var(_) | Tok::LParen => {
                    let c = self.col();
                    let f = self.power()?;
                    acc = self.lift(self.alg.mul(acc, f), c)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<A::Value, ParseError> {
        let start = self.col();
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let found = self.col();
        match self.bump().0 {
            Tok::Num(n) => {
                let e: u64 = n
                    .try_into()
                    .map_err(|_| ParseError::at(start, found, "exponent too large"))?;
                self.lift(self.alg.pow(base, e), start)
            }
            other => Err(ParseError::at(
                start,
                found,
                format!("exponent expected after '^', found {}", describe(&other)),
            )),
        }
    }

    fn atom(&mut self) -> Result<A::Value, ParseError> {
        let (tok, col) = self.bump();
        match tok {
            Tok::Num(n) => self.lift(self.alg.integer(&n), col),
            Tok::Var(c) => self
                .alg
                .variable(c)
                .ok_or_else(|| ParseError::at(col, col, format!("unknown variable '{c}'"))),
            Tok::LParen => {
                let v = self.expr()?;
                let (close, ccol) = self.bump();
                if close != Tok::RParen {
                    return Err(ParseError::at(
                        col,
                        ccol,
                        format!("unbalanced '(': expected ')', found {}", describe(&close)),
                    ));
                }
                Ok(v)
            }
            other => Err(ParseError::at(
                col,
                col,
                format!(
                    "expected a number, variable or '(', found {}",
                    describe(&other)
                ),
            )),
        }
    }
}

/// Parses `text` into `alg`.
pub fn parse_with<A: Algebra>(alg: &A, text: &str) -> Result<A::Value, ParseError> {
    let toks = lex(text)?;
    if toks.len() == 1 {
        return Err(ParseError::at(1, 1, "empty literal"));
    }
    let mut p = Parser { alg, toks, pos: 0 };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        let c = p.col();
        return Err(ParseError::at(
            c,
            c,
            format!("unexpected {}", describe(p.peek())),
        ));
    }
    Ok(v)
}

/// Elements of a ring, optionally with a named generator.
pub struct RingAlgebra<R: Ring> {
    pub parent: R::Parent,
    pub generator: Option<(char, R)>,
}

impl<R: Ring> Algebra for RingAlgebra<R> {
    type Value = R;
    fn integer(&self, n: &BigInt) -> Result<R, String> {
        Ok(R::from_integer(&self.parent, n))
    }
    fn variable(&self, name: char) -> Option<R> {
        self.generator
            .as_ref()
            .filter(|(c, _)| *c == name)
            .map(|(_, g)| g.clone())
    }
    fn add(&self, a: R, b: R) -> Result<R, String> {
        Ok(a + b)
    }
    fn sub(&self, a: R, b: R) -> Result<R, String> {
        Ok(a - b)
    }
    fn neg(&self, a: R) -> Result<R, String> {
        Ok(-a)
    }
    fn mul(&self, a: R, b: R) -> Result<R, String> {
        Ok(a * b)
    }
    fn pow(&self, a: R, e: u64) -> Result<R, String> {
        Ok(a.pow(e))
    }
}

/// Polynomials in `var` over a ring, optionally with a named generator of
/// the coefficient ring.
pub struct PolyAlgebra<R: Ring> {
    pub parent: R::Parent,
    pub var: char,
    pub generator: Option<(char, R)>,
    /// Terms above this degree are rejected.
    pub max_degree: usize,
}

impl<R: Ring> PolyAlgebra<R> {
    fn check(&self, p: DensePoly<R>) -> Result<DensePoly<R>, String> {
        match p.degree() {
            Some(d) if d > self.max_degree => {
                Err(format!("degree {d} exceeds the limit {}", self.max_degree))
            }
            _ => Ok(p),
        }
    }
}

impl<R: Ring> Algebra for PolyAlgebra<R> {
    type Value = DensePoly<R>;
    fn integer(&self, n: &BigInt) -> Result<DensePoly<R>, String> {
        Ok(DensePoly::constant(R::from_integer(&self.parent, n)))
    }
    fn variable(&self, name: char) -> Option<DensePoly<R>> {
        if name == self.var {
            return Some(DensePoly::x(&self.parent));
        }
        self.generator
            .as_ref()
            .filter(|(c, _)| *c == name)
            .map(|(_, g)| DensePoly::constant(g.clone()))
    }
    fn add(&self, a: DensePoly<R>, b: DensePoly<R>) -> Result<DensePoly<R>, String> {
        Ok(a.add(&b))
    }
    fn sub(&self, a: DensePoly<R>, b: DensePoly<R>) -> Result<DensePoly<R>, String> {
        Ok(a.sub(&b))
    }
    fn neg(&self, a: DensePoly<R>) -> Result<DensePoly<R>, String> {
        Ok(a.neg())
    }
    fn mul(&self, a: DensePoly<R>, b: DensePoly<R>) -> Result<DensePoly<R>, String> {
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        if da + db > self.max_degree {
            return Err(format!(
                "degree {} exceeds the limit {}",
                da + db,
                self.max_degree
            ));
        }
        self.check(a.mul(&b))
    }
    fn pow(&self, a: DensePoly<R>, e: u64) -> Result<DensePoly<R>, String> {
        let d = a.degree().unwrap_or(0) as u64;
        if d.saturating_mul(e) > self.max_degree as u64 {
            return Err(format!("degree exceeds the limit {}", self.max_degree));
        }
        let mut acc = DensePoly::one(&self.parent);
        for _ in 0..e {
            acc = acc.mul(&a);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integer, IntegerRing};

    fn ints() -> PolyAlgebra<Integer> {
        PolyAlgebra {
            parent: IntegerRing,
            var: 't',
            generator: None,
            max_degree: 64,
        }
    }

    #[test]
    fn series_literals() {
        let p = parse_with(&ints(), "1+2*t+t^2").unwrap();
        assert_eq!(p.to_text('t'), "t^2+2*t+1");
        let q = parse_with(&ints(), "1-2t").unwrap();
        assert_eq!(q.to_text('t'), "-2*t+1");
        let r = parse_with(&ints(), "(1+t)(1-t)").unwrap();
        assert_eq!(r.to_text('t'), "-t^2+1");
    }

    #[test]
    fn malformed_power_points_at_the_power() {
        let alg = PolyAlgebra::<Integer> { var: 'F', ..ints() };
        let e = parse_with(&alg, "F^+").unwrap_err();
        assert_eq!(e.column, 1);
        assert_eq!(e.found_column, 3);
        assert_eq!(e.clone().shifted(29).column, 30);
    }

    #[test]
    fn errors_have_positions() {
        assert_eq!(parse_with(&ints(), "1+").unwrap_err().column, 3);
        assert_eq!(parse_with(&ints(), "1+x").unwrap_err().column, 3);
        assert_eq!(parse_with(&ints(), "(1+t").unwrap_err().found_column, 5);
        assert_eq!(parse_with(&ints(), "1 $").unwrap_err().column, 3);
        assert!(parse_with(&ints(), "").is_err());
    }
}
