//! Polynomial text syntax: integers, variable names, `+ - * / ^` and
//! parentheses. Multiplication is always explicit (`2*x`, never `2x`).
//! Division is accepted only by a nonzero constant, so rational
//! coefficients printed as `3/4*x` read back unchanged. `#` starts a
//! comment that runs to the end of the line.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Polynomial, PolynomialRing, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Int(BigInt),
    /// `digits.digits`; only meaningful outside polynomial expressions.
    Decimal(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Eq,
    Arrow,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "{n}"),
            Token::Decimal(s) => f.write_str(s),
            Token::Ident(s) => f.write_str(s),
            Token::Plus => f.write_str("+"),
            Token::Minus => f.write_str("-"),
            Token::Star => f.write_str("*"),
            Token::Slash => f.write_str("/"),
            Token::Caret => f.write_str("^"),
            Token::LParen => f.write_str("("),
            Token::RParen => f.write_str(")"),
            Token::LBracket => f.write_str("["),
            Token::RBracket => f.write_str("]"),
            Token::Comma => f.write_str(","),
            Token::Semi => f.write_str(";"),
            Token::Colon => f.write_str(":"),
            Token::Eq => f.write_str("="),
            Token::Arrow => f.write_str("->"),
            Token::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub line: usize,
    pub column: usize,
    /// Byte offset of the token start.
    pub offset: usize,
    /// No whitespace between this token and the previous one.
    pub glued: bool,
}

pub fn parse_error(line: usize, column: usize, message: impl Into<String>, expected: &[&str]) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

/// Splits `text` into tokens. The last token is always `Eof`.
pub fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    let mut glued = false;
    while i < chars.len() {
        let (off, c) = chars[i];
        let (tl, tc) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            glued = false;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut i, &mut col);
            glued = false;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i].1 != '\n' {
                i += 1;
            }
            glued = false;
            continue;
        }
        let token = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                advance(1, &mut i, &mut col);
            }
            if i + 1 < chars.len() && chars[i].1 == '.' && chars[i + 1].1.is_ascii_digit() {
                advance(1, &mut i, &mut col);
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    advance(1, &mut i, &mut col);
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                Token::Decimal(s)
            } else {
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                Token::Int(s.parse().expect("ascii digits"))
            }
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                advance(1, &mut i, &mut col);
            }
            Token::Ident(chars[start..i].iter().map(|(_, c)| c).collect())
        } else {
            let next = chars.get(i + 1).map(|(_, c)| *c);
            let (tok, n) = match (c, next) {
                ('-', Some('>')) => (Token::Arrow, 2),
                ('+', _) => (Token::Plus, 1),
                ('-', _) => (Token::Minus, 1),
                ('*', _) => (Token::Star, 1),
                ('/', _) => (Token::Slash, 1),
                ('^', _) => (Token::Caret, 1),
                ('(', _) => (Token::LParen, 1),
                (')', _) => (Token::RParen, 1),
                ('[', _) => (Token::LBracket, 1),
                (']', _) => (Token::RBracket, 1),
                (',', _) => (Token::Comma, 1),
                (';', _) => (Token::Semi, 1),
                (':', _) => (Token::Colon, 1),
                ('=', _) => (Token::Eq, 1),
                _ => return Err(parse_error(tl, tc, format!("unexpected character `{c}`"), &[])),
            };
            advance(n, &mut i, &mut col);
            tok
        };
        out.push(Spanned { token, line: tl, column: tc, offset: off, glued });
        glued = true;
    }
    out.push(Spanned { token: Token::Eof, line, column: col, offset: text.len(), glued: false });
    Ok(out)
}

/// Unevaluated polynomial expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Name(_) => 5,
        }
    }

    /// Names referenced by the expression, in first-occurrence order.
    pub fn names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Int(_) => {}
            Expr::Name(n) => {
                if !out.contains(&n.as_str()) {
                    out.push(n)
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_names(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
        }
    }

    /// Evaluates in `ring`. Names resolve to ring variables first, then through `lookup`.
    pub fn eval(&self, ring: &PolynomialRing, lookup: &dyn Fn(&str) -> Option<Polynomial>) -> Result<Polynomial> {
        Ok(match self {
            Expr::Int(n) => Polynomial::constant(ring, Rational::from_integer(n.clone())),
            Expr::Name(n) => match ring.index_of(n) {
                Some(i) => Polynomial::var(ring, i),
                None => {
                    let p = lookup(n).ok_or_else(|| Error::UnknownVariable(n.clone()))?;
                    p.to_ring(ring)?
                }
            },
            Expr::Neg(a) => -a.eval(ring, lookup)?,
            Expr::Add(a, b) => a.eval(ring, lookup)?.checked_add(&b.eval(ring, lookup)?)?,
            Expr::Sub(a, b) => a.eval(ring, lookup)?.checked_sub(&b.eval(ring, lookup)?)?,
            Expr::Mul(a, b) => a.eval(ring, lookup)?.checked_mul(&b.eval(ring, lookup)?)?,
            Expr::Div(a, b) => {
                let d = b.eval(ring, lookup)?;
                let c = d
                    .constant_value()
                    .ok_or_else(|| Error::contract(format!("division by non-constant `{d}`")))?;
                if c.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                a.eval(ring, lookup)?.scale(&c.recip())
            }
            Expr::Pow(a, e) => a.eval(ring, lookup)?.pow(*e),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Left-associative binary operators: a left child needs parentheses
        // only below the operator's precedence, a right child also at equal
        // precedence. This keeps print -> parse structurally exact.
        fn child(f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
            if paren {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        let p = self.precedence();
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Name(n) => f.write_str(n),
            Expr::Neg(a) => {
                f.write_str("-")?;
                child(f, a, a.precedence() < p)
            }
            Expr::Pow(a, e) => {
                child(f, a, a.precedence() < 5)?;
                write!(f, "^{e}")
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                let op = match self {
                    Expr::Add(..) => " + ",
                    Expr::Sub(..) => " - ",
                    Expr::Mul(..) => "*",
                    _ => "/",
                };
                child(f, a, a.precedence() < p)?;
                f.write_str(op)?;
                child(f, b, b.precedence() <= p)
            }
        }
    }
}

/// Recursive-descent expression parser over a token slice.
pub struct ExprParser<'a> {
    tokens: &'a [Spanned],
    pos: usize,
    stop_words: &'a [&'a str],
}

impl<'a> ExprParser<'a> {
    pub fn new(tokens: &'a [Spanned], pos: usize) -> Self {
        ExprParser { tokens, pos, stop_words: &[] }
    }

    /// Identifiers that end an expression instead of being reported as
    /// implicit multiplication, e.g. `in` in `member h in I`.
    pub fn stop_at(mut self, words: &'a [&'a str]) -> Self {
        self.stop_words = words;
        self
    }

    /// Index of the first token not consumed.
    pub fn position(&self) -> usize {
        self.pos
    }

    fn peek(&self) -> &Spanned {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> &Spanned {
        let t = &self.tokens[self.pos.min(self.tokens.len() - 1)];
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: String, expected: &[&str]) -> Error {
        let t = self.peek();
        parse_error(t.line, t.column, message, expected)
    }

    pub fn parse_expr(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_term()?;
        loop {
            match self.peek().token {
                Token::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.parse_term()?));
                }
                Token::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.parse_term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_unary()?;
        loop {
            match self.peek().token {
                Token::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.parse_unary()?));
                }
                Token::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.parse_unary()?));
                }
                Token::Ident(ref s) if self.stop_words.contains(&s.as_str()) => return Ok(lhs),
                Token::Int(_) | Token::Ident(_) | Token::LParen => {
                    let t = self.peek();
                    return Err(parse_error(
                        t.line,
                        t.column,
                        format!("implicit multiplication is not accepted before `{}`", t.token),
                        &["*", "+", "-", "^"],
                    ));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Expr> {
        match self.peek().token {
            Token::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.parse_unary()?)))
            }
            Token::Plus => {
                self.bump();
                self.parse_unary()
            }
            _ => self.parse_power(),
        }
    }

    fn parse_power(&mut self) -> Result<Expr> {
        let base = self.parse_atom()?;
        if self.peek().token != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.peek().clone();
        match t.token {
            Token::Int(n) => {
                self.bump();
                let e = n
                    .to_u32()
                    .ok_or_else(|| parse_error(t.line, t.column, format!("exponent {n} is too large"), &[]))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            other => Err(self.error(
                format!("expected a non-negative integer exponent, found `{other}`"),
                &["integer"],
            )),
        }
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match t.token {
            Token::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Token::Ident(s) => {
                self.bump();
                Ok(Expr::Name(s))
            }
            Token::LParen => {
                self.bump();
                let e = self.parse_expr()?;
                if self.peek().token != Token::RParen {
                    return Err(self.error(format!("expected `)`, found `{}`", self.peek().token), &[")"]));
                }
                self.bump();
                Ok(e)
            }
            other => Err(self.error(
                format!("expected a polynomial term, found `{other}`"),
                &["integer", "identifier", "(", "-"],
            )),
        }
    }
}

/// Parses a standalone expression (the whole text must be consumed).
pub fn parse_expr(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    let mut p = ExprParser::new(&tokens, 0);
    let e = p.parse_expr()?;
    let t = p.peek();
    if t.token != Token::Eof {
        return Err(parse_error(
            t.line,
            t.column,
            format!("unexpected `{}` after expression", t.token),
            &["+", "-", "*", "/", "^", "end of input"],
        ));
    }
    Ok(e)
}

/// Parses `text` as a polynomial in `ring`; every name must be a ring variable.
pub fn parse_polynomial(ring: &PolynomialRing, text: &str) -> Result<Polynomial> {
    parse_expr(text)?.eval(ring, &|_| None)
}
