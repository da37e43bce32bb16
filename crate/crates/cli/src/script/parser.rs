use sphere_forge::polyring::{tokenize, Expr, ExprParser, Spanned, Token};
use sphere_forge::Error as CoreError;

use super::ast::*;
use super::ScriptError;

const EXPR_STOP: [&str; 3] = ["in", "expect", "with"];

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

/// Parses the script syntax only; name resolution is done by [`super::check`].
pub fn parse_syntax(text: &str) -> Result<Script, ScriptError> {
    let tokens = tokenize(text).map_err(ScriptError::from_core)?;
    let mut p = Parser { tokens, pos: 0 };
    let mut stmts = Vec::new();
    while p.peek().token != Token::Eof {
        stmts.push(p.stmt()?);
    }
    Ok(Script { stmts })
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Spanned {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.tokens[self.pos].clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: String, expected: &[&str]) -> ScriptError {
        let t = self.peek();
        ScriptError::Syntax {
            line: t.line,
            column: t.column,
            message,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn found(&self) -> String {
        match &self.peek().token {
            Token::Eof => "end of input".into(),
            t => format!("`{t}`"),
        }
    }

    fn punct(&mut self, tok: Token) -> Result<(), ScriptError> {
        if self.peek().token == tok {
            self.bump();
            Ok(())
        } else {
            let want = tok.to_string();
            Err(self.error(format!("expected `{want}`, found {}", self.found()), &[want.as_str()]))
        }
    }

    fn eat(&mut self, tok: Token) -> bool {
        if self.peek().token == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(&self.peek().token, Token::Ident(s) if s == w)
    }

    fn keyword(&mut self, w: &str) -> Result<(), ScriptError> {
        if self.is_word(w) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{w}`, found {}", self.found()), &[w]))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ScriptError> {
        match &self.peek().token {
            Token::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}, found {}", self.found()), &["identifier"])),
        }
    }

    /// An identifier possibly joined to further identifiers by glued `-`,
    /// as in `radical-member`.
    fn word(&mut self) -> Result<String, ScriptError> {
        let mut w = self.ident("a declaration or command")?;
        while self.peek().token == Token::Minus
            && self.peek().glued
            && matches!(self.peek_at(1).token, Token::Ident(_))
            && self.peek_at(1).glued
        {
            self.bump();
            let Token::Ident(s) = self.bump().token else { unreachable!() };
            w.push('-');
            w.push_str(&s);
        }
        Ok(w)
    }

    fn uint(&mut self, what: &str) -> Result<u64, ScriptError> {
        match &self.peek().token {
            Token::Int(n) => {
                let v = u64::try_from(n.clone())
                    .map_err(|_| self.error(format!("{what} {n} is out of range"), &[]))?;
                self.bump();
                Ok(v)
            }
            _ => Err(self.error(format!("expected {what}, found {}", self.found()), &["integer"])),
        }
    }

    fn small(&mut self, what: &str) -> Result<u32, ScriptError> {
        let v = self.uint(what)?;
        u32::try_from(v).map_err(|_| self.error(format!("{what} {v} is out of range"), &[]))
    }

    fn expr(&mut self) -> Result<Expr, ScriptError> {
        let mut p = ExprParser::new(&self.tokens, self.pos).stop_at(&EXPR_STOP);
        let e = p.parse_expr().map_err(ScriptError::from_core)?;
        self.pos = p.position();
        Ok(e)
    }

    fn expr_list(&mut self, close: Token) -> Result<Vec<Expr>, ScriptError> {
        let mut out = Vec::new();
        if self.peek().token == close {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if !self.eat(Token::Comma) {
                return Ok(out);
            }
        }
    }

    fn ident_list(&mut self, what: &str) -> Result<Vec<String>, ScriptError> {
        let mut out = vec![self.ident(what)?];
        while self.eat(Token::Comma) {
            out.push(self.ident(what)?);
        }
        Ok(out)
    }

    fn stmt(&mut self) -> Result<Stmt, ScriptError> {
        let (line, column) = (self.peek().line, self.peek().column);
        let w = self.word()?;
        let kind = match w.as_str() {
            "ring" => self.ring()?,
            "use" => StmtKind::Use { name: self.ident("a ring or scheme name")? },
            "poly" => {
                let name = self.ident("a polynomial name")?;
                self.punct(Token::Eq)?;
                StmtKind::Poly { name, expr: self.expr()? }
            }
            "ideal" => {
                let name = self.ident("an ideal name")?;
                self.punct(Token::Eq)?;
                let gens = self.expr_list(Token::Semi)?;
                StmtKind::Ideal { name, gens }
            }
            "scheme" => {
                let name = self.ident("a scheme name")?;
                self.punct(Token::Eq)?;
                let id = self.ident("an ideal name or `affine`")?;
                let source = if id == "affine" { SchemeSource::Affine } else { SchemeSource::Ideal(id) };
                StmtKind::Scheme { name, source }
            }
            "center" => self.center()?,
            "matrix" => self.matrix()?,
            "map" => {
                let name = self.ident("a map name")?;
                self.punct(Token::Colon)?;
                let source = self.ident("the source scheme")?;
                self.punct(Token::Arrow)?;
                let target = self.ident("the target scheme")?;
                self.punct(Token::Eq)?;
                self.punct(Token::LParen)?;
                let components = self.expr_list(Token::RParen)?;
                self.punct(Token::RParen)?;
                StmtKind::Map { name, source, target, components }
            }
            "certificate" => {
                let name = self.ident("a certificate name")?;
                self.punct(Token::Eq)?;
                let forward = self.ident("the forward map")?;
                self.punct(Token::Comma)?;
                let inverse = self.ident("the inverse map")?;
                StmtKind::Certificate { name, forward, inverse }
            }
            other if COMMANDS.contains(&other) => StmtKind::Command(self.command(other)?),
            other => {
                self.pos -= 1;
                let mut expected: Vec<&str> = DECLARATIONS.to_vec();
                expected.extend(COMMANDS);
                return Err(ScriptError::Syntax {
                    line,
                    column,
                    message: format!("unknown declaration or command `{other}`"),
                    expected: expected.into_iter().map(String::from).collect(),
                });
            }
        };
        if self.peek().token != Token::Semi {
            return Err(self.error(format!("expected `;`, found {}", self.found()), &[";"]));
        }
        self.bump();
        Ok(Stmt { line, column, kind })
    }

    fn ring(&mut self) -> Result<StmtKind, ScriptError> {
        let name = self.ident("a ring name")?;
        self.punct(Token::Eq)?;
        self.keyword("Q")?;
        self.punct(Token::LBracket)?;
        let vars = self.ident_list("a variable name")?;
        self.punct(Token::RBracket)?;
        let order = if self.is_word("order") {
            self.bump();
            let o = self.ident("a monomial order")?;
            Some(match o.as_str() {
                "grevlex" => OrderSpec::Grevlex,
                "lex" => OrderSpec::Lex,
                "block" => {
                    self.punct(Token::LParen)?;
                    let v = self.ident_list("a variable name")?;
                    self.punct(Token::RParen)?;
                    OrderSpec::Block(v)
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.error(format!("unknown monomial order `{o}`"), &["grevlex", "lex", "block"]));
                }
            })
        } else {
            None
        };
        Ok(StmtKind::Ring { name, vars, order })
    }

    fn center(&mut self) -> Result<StmtKind, ScriptError> {
        let name = self.ident("a center name")?;
        self.punct(Token::Eq)?;
        self.punct(Token::LParen)?;
        let f = self.expr()?;
        self.punct(Token::Comma)?;
        let g = self.expr()?;
        self.punct(Token::RParen)?;
        self.keyword("on")?;
        let scheme = self.ident("a scheme name")?;
        self.keyword("at")?;
        self.punct(Token::LParen)?;
        let point = self.expr_list(Token::RParen)?;
        self.punct(Token::RParen)?;
        Ok(StmtKind::Center { name, f, g, scheme, point })
    }

    fn matrix(&mut self) -> Result<StmtKind, ScriptError> {
        let name = self.ident("a matrix name")?;
        self.punct(Token::Eq)?;
        self.punct(Token::LBracket)?;
        let mut rows = Vec::new();
        for i in 0..2 {
            if i == 1 {
                self.punct(Token::Comma)?;
            }
            self.punct(Token::LBracket)?;
            let a = self.expr()?;
            self.punct(Token::Comma)?;
            let b = self.expr()?;
            self.punct(Token::RBracket)?;
            rows.push(a);
            rows.push(b);
        }
        self.punct(Token::RBracket)?;
        let entries: [Expr; 4] = rows.try_into().expect("two rows of two");
        Ok(StmtKind::Matrix { name, entries })
    }

    fn triple(&mut self) -> Result<(u32, u32, u32), ScriptError> {
        let p = self.small("an exponent")?;
        self.punct(Token::Comma)?;
        let q = self.small("an exponent")?;
        self.punct(Token::Comma)?;
        let r = self.small("an exponent")?;
        Ok((p, q, r))
    }

    fn as_name(&mut self) -> Result<String, ScriptError> {
        self.keyword("as")?;
        self.ident("a name for the result")
    }

    fn command(&mut self, w: &str) -> Result<Command, ScriptError> {
        let op = match w {
            "groebner" => Op::Groebner { ideal: self.ident("an ideal name")? },
            "member" | "radical-member" => {
                let poly = self.expr()?;
                self.keyword("in")?;
                let ideal = self.ident("an ideal name")?;
                if w == "member" {
                    Op::Member { poly, ideal }
                } else {
                    Op::RadicalMember { poly, ideal }
                }
            }
            "dim" => Op::Dim { target: self.ident("an ideal or scheme name")? },
            "equal" => {
                let left = self.ident("an ideal or scheme name")?;
                self.punct(Token::Comma)?;
                let right = self.ident("an ideal or scheme name")?;
                Op::Equal { left, right }
            }
            "smooth" => Op::Smooth { target: self.ident("an ideal or scheme name")? },
            "support" => Op::Support { center: self.ident("a center name")? },
            "build" => {
                let center = self.ident("a center name")?;
                Op::Build { center, name: self.as_name()? }
            }
            "ga-check" => Op::GaCheck { space: self.ident("a total space name")? },
            "reschange" => {
                let center = self.ident("a center name")?;
                self.punct(Token::Comma)?;
                let matrix = self.ident("a matrix name")?;
                Op::Reschange { center, matrix, name: self.as_name()? }
            }
            "pair-iso" => {
                let left = self.ident("a center name")?;
                self.punct(Token::Comma)?;
                let right = self.ident("a center name")?;
                self.keyword("via")?;
                Op::PairIso { left, right, cert: self.ident("a certificate name")? }
            }
            "brieskorn" => {
                let (p, q, r) = self.triple()?;
                Op::Brieskorn { p, q, r, name: self.as_name()? }
            }
            "gm-check" => {
                let (p, q, r) = self.triple()?;
                let mut centers = Vec::new();
                if self.is_word("centers") {
                    self.bump();
                    loop {
                        self.punct(Token::LParen)?;
                        let m = self.small("an exponent")?;
                        self.punct(Token::Comma)?;
                        let n = self.small("an exponent")?;
                        self.punct(Token::RParen)?;
                        centers.push((m, n));
                        if !self.eat(Token::Comma) {
                            break;
                        }
                    }
                }
                Op::GmCheck { p, q, r, centers }
            }
            "diag-family" => {
                let name = if self.is_word("as") { Some(self.as_name()?) } else { None };
                Op::DiagFamily { name }
            }
            "trivialize" => Op::Trivialize,
            "fiber" => {
                self.punct(Token::LParen)?;
                let a = self.expr()?;
                self.punct(Token::Comma)?;
                let b = self.expr()?;
                self.punct(Token::RParen)?;
                Op::Fiber { point: [a, b] }
            }
            "assert-eq" => {
                let left = self.expr()?;
                self.punct(Token::Comma)?;
                Op::AssertEq { left, right: self.expr()? }
            }
            "iso-check" => Op::IsoCheck { cert: self.ident("a certificate name")? },
            _ => unreachable!("checked against COMMANDS"),
        };
        let mut cmd = Command::new(op);
        if self.is_word("expect") {
            self.bump();
            cmd.expect = Some(match self.peek().token.clone() {
                Token::Ident(s) => {
                    self.bump();
                    Expect::Word(s)
                }
                Token::Minus => {
                    self.bump();
                    Expect::Int(-(self.uint("an integer")? as i64))
                }
                Token::Int(_) => Expect::Int(self.uint("an integer")? as i64),
                _ => return Err(self.error(format!("expected an outcome, found {}", self.found()), &["identifier", "integer"])),
            });
        }
        if self.is_word("with") {
            self.bump();
            if self.is_word("steps") {
                self.bump();
                cmd.budget.steps = Some(self.uint("a step count")?);
            }
            if self.is_word("timeout") {
                self.bump();
                cmd.budget.timeout = Some(match self.peek().token.clone() {
                    Token::Int(n) => n.to_string(),
                    Token::Decimal(d) => d,
                    _ => return Err(self.error(format!("expected seconds, found {}", self.found()), &["number"])),
                });
                self.bump();
            }
            if cmd.budget.is_empty() {
                return Err(self.error(format!("expected `steps` or `timeout`, found {}", self.found()), &["steps", "timeout"]));
            }
        }
        Ok(cmd)
    }
}

impl ScriptError {
    pub(crate) fn from_core(e: CoreError) -> Self {
        match e {
            CoreError::Parse { line, column, message, expected } => ScriptError::Syntax { line, column, message, expected },
            other => ScriptError::Syntax { line: 0, column: 0, message: other.to_string(), expected: Vec::new() },
        }
    }
}
