//! Recursive-descent parser for skein-algebra expressions.
//!
//! ```text
//! expr   := '-'? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := '(' int ',' int ')' ('_T' | '^' uint)?
//!         | '(' expr ')'
//!         | 'phi'
//!         | 't' ('^' int)?
//!         | uint
//! ```
//!
//! `(p,q)` without a suffix is the T-basis curve `(p,q)_T`; `(p,q)^n` is
//! the simple-diagram atom (n parallel copies of a primitive curve).
//! Products are noncommutative and left-associative; `^` binds tighter
//! than `*`. Whitespace is insignificant.

use num_bigint::BigInt;

use crate::algebra::{CurveIndex, SimpleElement, SkeinElement};
use crate::error::{ParseError, SkeinError};
use crate::scalar::{LaurentPoly, ScalarContext};

/// Abstract syntax of an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Expression {
    /// A Laurent-monomial or integer literal.
    Scalar(LaurentPoly),
    /// `(p,q)_T`, a T-basis curve; (0,0) is the empty skein.
    Basis {
        p: i64,
        q: i64,
    },
    /// `(p,q)^n`, n parallel copies of a primitive curve.
    Simple {
        p: i64,
        q: i64,
        n: u32,
    },
    /// `phi`, the empty skein.
    Phi,
    Sum(Box<Expression>, Box<Expression>),
    Difference(Box<Expression>, Box<Expression>),
    Product(Box<Expression>, Box<Expression>),
    Power(Box<Expression>, u32),
    Group(Box<Expression>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    T,
    Phi,
    TSuffix,
    Plus,
    Minus,
    Star,
    Caret,
    Comma,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer '{s}'"),
            Tok::T => "'t'".into(),
            Tok::Phi => "'phi'".into(),
            Tok::TSuffix => "'_T'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Comma => "','".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => pushed(&mut out, Tok::Plus, &mut i),
            '-' => pushed(&mut out, Tok::Minus, &mut i),
            '*' => pushed(&mut out, Tok::Star, &mut i),
            '^' => pushed(&mut out, Tok::Caret, &mut i),
            ',' => pushed(&mut out, Tok::Comma, &mut i),
            '(' => pushed(&mut out, Tok::LParen, &mut i),
            ')' => pushed(&mut out, Tok::RParen, &mut i),
            '_' => {
                if bytes.get(i + 1) == Some(&b'T') {
                    out.push((Tok::TSuffix, i));
                    i += 2;
                } else {
                    return Err(err_at(i, "'_'", &["'_T'"]));
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(src[start..i].to_string()), start));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                match &src[start..i] {
                    "t" => out.push((Tok::T, start)),
                    "phi" => out.push((Tok::Phi, start)),
                    other => {
                        return Err(err_at(start, &format!("'{other}'"), &["'t'", "'phi'"]));
                    }
                }
            }
            other => {
                return Err(err_at(
                    i,
                    &format!("'{other}'"),
                    &["digit", "'t'", "'phi'", "operator", "'('"],
                ));
            }
        }
    }
    Ok(out)
}

fn pushed(out: &mut Vec<(Tok, usize)>, t: Tok, i: &mut usize) {
    out.push((t, *i));
    *i += 1;
}

fn err_at(position: usize, found: &str, expected: &[&str]) -> ParseError {
    ParseError {
        position,
        found: found.to_string(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, ahead: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + ahead).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(t) => t.describe(),
            None => "end of input".into(),
        }
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError {
            position: self.here(),
            found: self.found(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn parse_expr(&mut self) -> Result<Expression, ParseError> {
        let mut node = if self.eat(&Tok::Minus) {
            Expression::Difference(
                Box::new(Expression::Scalar(LaurentPoly::zero())),
                Box::new(self.parse_term()?),
            )
        } else {
            self.parse_term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                node = Expression::Sum(Box::new(node), Box::new(self.parse_term()?));
            } else if self.eat(&Tok::Minus) {
                node = Expression::Difference(Box::new(node), Box::new(self.parse_term()?));
            } else {
                break;
            }
        }
        Ok(node)
    }

    fn parse_term(&mut self) -> Result<Expression, ParseError> {
        let mut node = self.parse_factor()?;
        while self.eat(&Tok::Star) {
            node = Expression::Product(Box::new(node), Box::new(self.parse_factor()?));
        }
        Ok(node)
    }

    fn parse_factor(&mut self) -> Result<Expression, ParseError> {
        let atom = self.parse_atom()?;
        if self.eat(&Tok::Caret) {
            let n = self.parse_uint()?;
            Ok(Expression::Power(Box::new(atom), n))
        } else {
            Ok(atom)
        }
    }

    fn parse_atom(&mut self) -> Result<Expression, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(digits)) = self.bump() else {
                    unreachable!()
                };
                let n: BigInt = digits.parse().expect("lexer produced digits");
                Ok(Expression::Scalar(LaurentPoly::monomial(0, n)))
            }
            Some(Tok::T) => {
                self.bump();
                let k = if self.eat(&Tok::Caret) {
                    self.parse_int()?
                } else {
                    1
                };
                Ok(Expression::Scalar(LaurentPoly::monomial(k, 1)))
            }
            Some(Tok::Phi) => {
                self.bump();
                Ok(Expression::Phi)
            }
            Some(Tok::LParen) => {
                if self.looks_like_curve() {
                    self.parse_curve()
                } else {
                    self.bump();
                    let inner = self.parse_expr()?;
                    self.expect(&Tok::RParen, "')'")?;
                    Ok(Expression::Group(Box::new(inner)))
                }
            }
            _ => Err(self.error(&["integer", "'t'", "'phi'", "'('"])),
        }
    }

    /// After a '(': an optionally signed integer followed by ',' starts a
    /// curve atom; anything else is a parenthesized expression.
    fn looks_like_curve(&self) -> bool {
        let mut k = 1;
        if matches!(self.peek_at(k), Some(Tok::Minus)) {
            k += 1;
        }
        matches!(self.peek_at(k), Some(Tok::Int(_)))
            && matches!(self.peek_at(k + 1), Some(Tok::Comma))
    }

    fn parse_curve(&mut self) -> Result<Expression, ParseError> {
        self.expect(&Tok::LParen, "'('")?;
        let p = self.parse_int()?;
        self.expect(&Tok::Comma, "','")?;
        let q = self.parse_int()?;
        self.expect(&Tok::RParen, "')'")?;
        if self.eat(&Tok::TSuffix) {
            Ok(Expression::Basis { p, q })
        } else if self.eat(&Tok::Caret) {
            let n = self.parse_uint()?;
            Ok(Expression::Simple { p, q, n })
        } else {
            Ok(Expression::Basis { p, q })
        }
    }

    fn parse_int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(&Tok::Minus);
        let pos = self.here();
        match self.peek() {
            Some(Tok::Int(digits)) => {
                let v: i64 = digits.parse().map_err(|_| {
                    err_at(
                        pos,
                        &format!("integer '{digits}'"),
                        &["integer in i64 range"],
                    )
                })?;
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn parse_uint(&mut self) -> Result<u32, ParseError> {
        let pos = self.here();
        match self.peek() {
            Some(Tok::Int(digits)) => {
                let v = digits.parse().map_err(|_| {
                    err_at(
                        pos,
                        &format!("integer '{digits}'"),
                        &["exponent in u32 range"],
                    )
                })?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error(&["nonnegative integer"])),
        }
    }
}

/// Parse a source string into an expression tree.
pub fn parse_expression(src: &str) -> Result<Expression, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: src.len(),
    };
    let expr = p.parse_expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(expr)
}

/// Evaluate an expression to a canonical T-basis element. Simple atoms
/// convert through the Chebyshev change of basis; powers are repeated
/// products.
pub fn evaluate(expr: &Expression, ctx: &ScalarContext) -> Result<SkeinElement, SkeinError> {
    match expr {
        Expression::Scalar(p) => Ok(SkeinElement::single(CurveIndex::ZERO, ctx.from_laurent(p))),
        Expression::Basis { p, q } => Ok(SkeinElement::basis(CurveIndex::new(*p, *q), ctx)),
        Expression::Simple { p, q, n } => {
            if *n == 0 {
                return Ok(SkeinElement::phi(ctx));
            }
            let mut s = SimpleElement::zero();
            s.add_term(CurveIndex::new(*p, *q), *n as i64, ctx.one(), ctx)?;
            s.to_t(ctx)
        }
        Expression::Phi => Ok(SkeinElement::phi(ctx)),
        Expression::Sum(a, b) => evaluate(a, ctx)?.add(&evaluate(b, ctx)?, ctx),
        Expression::Difference(a, b) => evaluate(a, ctx)?.sub(&evaluate(b, ctx)?, ctx),
        Expression::Product(a, b) => evaluate(a, ctx)?.multiply(&evaluate(b, ctx)?, ctx),
        Expression::Power(a, n) => evaluate(a, ctx)?.pow(*n, ctx),
        Expression::Group(a) => evaluate(a, ctx),
    }
}
