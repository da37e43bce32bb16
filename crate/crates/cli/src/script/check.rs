use std::collections::HashMap;

use sphere_forge::bundles::{U_NAME, V_NAME};
use sphere_forge::families::FAMILY_VARIABLES;
use sphere_forge::polyring::Expr;

use super::ast::*;
use super::ScriptError;

/// Names that would be ambiguous inside expressions.
pub const RESERVED: [&str; 4] = ["in", "expect", "with", "affine"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Ring,
    Poly,
    Ideal,
    Scheme,
    /// A scheme built by `build`, carrying its fiber coordinates.
    Bundle,
    Center,
    Matrix,
    Map,
    Certificate,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Ring => "a ring",
            Kind::Poly => "a polynomial",
            Kind::Ideal => "an ideal",
            Kind::Scheme => "a scheme",
            Kind::Bundle => "a total space",
            Kind::Center => "a center",
            Kind::Matrix => "a matrix",
            Kind::Map => "a map",
            Kind::Certificate => "a certificate",
        }
    }
}

#[derive(Clone, Debug)]
struct Sym {
    kind: Kind,
    /// Variables of the ring the object lives in.
    vars: Vec<String>,
    /// For maps: source and target variables.
    arity: usize,
}

struct Checker {
    syms: HashMap<String, Sym>,
    active: Option<Vec<String>>,
    line: usize,
    column: usize,
}

const SCHEMES: &[Kind] = &[Kind::Ideal, Kind::Scheme, Kind::Bundle];

/// Resolves names: every identifier is declared before use and declared
/// once, ring variables are distinct, references have the right kind and
/// `expect` outcomes are valid for their command.
pub fn check(script: &Script) -> Result<(), ScriptError> {
    let mut c = Checker { syms: HashMap::new(), active: None, line: 0, column: 0 };
    for s in &script.stmts {
        c.line = s.line;
        c.column = s.column;
        c.stmt(&s.kind)?;
    }
    Ok(())
}

impl Checker {
    fn invalid(&self, message: String) -> ScriptError {
        ScriptError::Invalid { line: self.line, column: self.column, message }
    }

    fn lookup(&self, name: &str, allowed: &[Kind]) -> Result<&Sym, ScriptError> {
        let sym = self.syms.get(name).ok_or_else(|| ScriptError::UseBeforeDeclaration {
            line: self.line,
            column: self.column,
            name: name.to_string(),
        })?;
        if !allowed.contains(&sym.kind) {
            let expected: Vec<&str> = allowed.iter().map(|k| k.name()).collect();
            return Err(ScriptError::WrongKind {
                line: self.line,
                column: self.column,
                name: name.to_string(),
                expected: expected.join(" or "),
                found: sym.kind.name().to_string(),
            });
        }
        Ok(sym)
    }

    fn declare(&mut self, name: &str, kind: Kind, vars: Vec<String>, arity: usize) -> Result<(), ScriptError> {
        if self.syms.contains_key(name) {
            return Err(ScriptError::DuplicateIdentifier { line: self.line, column: self.column, name: name.to_string() });
        }
        if RESERVED.contains(&name) {
            return Err(self.invalid(format!("`{name}` is reserved")));
        }
        self.syms.insert(name.to_string(), Sym { kind, vars, arity });
        Ok(())
    }

    fn active_vars(&self, name_for_error: &str) -> Result<Vec<String>, ScriptError> {
        self.active.clone().ok_or_else(|| ScriptError::UseBeforeDeclaration {
            line: self.line,
            column: self.column,
            name: name_for_error.to_string(),
        })
    }

    fn expr_in(&self, e: &Expr, vars: &[String]) -> Result<(), ScriptError> {
        for n in e.names() {
            if vars.iter().any(|v| v == n) {
                continue;
            }
            match self.syms.get(n) {
                Some(s) if s.kind == Kind::Poly => {}
                Some(s) => {
                    return Err(ScriptError::WrongKind {
                        line: self.line,
                        column: self.column,
                        name: n.to_string(),
                        expected: "a variable or polynomial".into(),
                        found: s.kind.name().into(),
                    })
                }
                None => {
                    return Err(ScriptError::UseBeforeDeclaration {
                        line: self.line,
                        column: self.column,
                        name: n.to_string(),
                    })
                }
            }
        }
        Ok(())
    }

    fn expr_active(&self, e: &Expr) -> Result<(), ScriptError> {
        match &self.active {
            Some(v) => self.expr_in(e, v),
            None => match e.names().first() {
                Some(n) => self.expr_in(e, &[]).and_then(|_| self.active_vars(n).map(|_| ())),
                None => Ok(()),
            },
        }
    }

    fn constant(&self, e: &Expr) -> Result<(), ScriptError> {
        match e.names().first() {
            Some(n) => Err(self.invalid(format!("coordinates must be numbers, found `{n}`"))),
            None => Ok(()),
        }
    }

    fn stmt(&mut self, kind: &StmtKind) -> Result<(), ScriptError> {
        match kind {
            StmtKind::Ring { name, vars, order } => {
                for (i, v) in vars.iter().enumerate() {
                    if vars[..i].contains(v) {
                        return Err(ScriptError::DuplicateVariable { line: self.line, column: self.column, name: v.clone() });
                    }
                    if RESERVED.contains(&v.as_str()) {
                        return Err(self.invalid(format!("`{v}` is reserved and cannot be a variable")));
                    }
                }
                if let Some(OrderSpec::Block(b)) = order {
                    if let Some(v) = b.iter().find(|v| !vars.contains(v)) {
                        return Err(self.invalid(format!("block order names `{v}`, which is not a variable of {name}")));
                    }
                }
                self.declare(name, Kind::Ring, vars.clone(), 0)?;
                self.active = Some(vars.clone());
            }
            StmtKind::Use { name } => {
                let vars = self.lookup(name, &[Kind::Ring, Kind::Ideal, Kind::Scheme, Kind::Bundle, Kind::Center])?.vars.clone();
                self.active = Some(vars);
            }
            StmtKind::Poly { name, expr } => {
                self.expr_active(expr)?;
                let vars = self.active_vars(name)?;
                self.declare(name, Kind::Poly, vars, 0)?;
            }
            StmtKind::Ideal { name, gens } => {
                let vars = self.active_vars(gens.first().and_then(|g| g.names().first().map(|s| s.to_string())).as_deref().unwrap_or(name))?;
                for g in gens {
                    self.expr_in(g, &vars)?;
                }
                self.declare(name, Kind::Ideal, vars, 0)?;
            }
            StmtKind::Scheme { name, source } => {
                let vars = match source {
                    SchemeSource::Affine => self.active_vars("affine")?,
                    SchemeSource::Ideal(i) => self.lookup(i, &[Kind::Ideal])?.vars.clone(),
                };
                self.declare(name, Kind::Scheme, vars, 0)?;
            }
            StmtKind::Center { name, f, g, scheme, point } => {
                let vars = self.lookup(scheme, &[Kind::Scheme, Kind::Bundle])?.vars.clone();
                self.expr_in(f, &vars)?;
                self.expr_in(g, &vars)?;
                if point.len() != vars.len() {
                    return Err(self.invalid(format!(
                        "support point has {} coordinates, {scheme} has {} variables",
                        point.len(),
                        vars.len()
                    )));
                }
                for p in point {
                    self.constant(p)?;
                }
                self.declare(name, Kind::Center, vars, 0)?;
            }
            StmtKind::Matrix { name, entries } => {
                for e in entries {
                    self.expr_active(e)?;
                }
                let vars = self.active.clone().unwrap_or_default();
                self.declare(name, Kind::Matrix, vars, 0)?;
            }
            StmtKind::Map { name, source, target, components } => {
                let svars = self.lookup(source, &[Kind::Scheme, Kind::Bundle])?.vars.clone();
                let tvars = self.lookup(target, &[Kind::Scheme, Kind::Bundle])?.vars.clone();
                if components.len() != tvars.len() {
                    return Err(self.invalid(format!(
                        "map into {target} needs {} components, found {}",
                        tvars.len(),
                        components.len()
                    )));
                }
                for e in components {
                    self.expr_in(e, &svars)?;
                }
                self.declare(name, Kind::Map, svars, tvars.len())?;
            }
            StmtKind::Certificate { name, forward, inverse } => {
                let f = self.lookup(forward, &[Kind::Map])?.clone();
                let g = self.lookup(inverse, &[Kind::Map])?.clone();
                if f.arity != g.vars.len() || g.arity != f.vars.len() {
                    return Err(self.invalid(format!("{forward} and {inverse} do not go in opposite directions")));
                }
                self.declare(name, Kind::Certificate, f.vars, 0)?;
            }
            StmtKind::Command(cmd) => self.command(cmd)?,
        }
        Ok(())
    }

    fn command(&mut self, cmd: &Command) -> Result<(), ScriptError> {
        match &cmd.op {
            Op::Groebner { ideal } | Op::Dim { target: ideal } | Op::Smooth { target: ideal } => {
                self.lookup(ideal, SCHEMES)?;
            }
            Op::Member { poly, ideal } | Op::RadicalMember { poly, ideal } => {
                let vars = self.lookup(ideal, SCHEMES)?.vars.clone();
                self.expr_in(poly, &vars)?;
            }
            Op::Equal { left, right } => {
                self.lookup(left, SCHEMES)?;
                self.lookup(right, SCHEMES)?;
            }
            Op::Support { center } => {
                self.lookup(center, &[Kind::Center])?;
            }
            Op::Build { center, name } => {
                let mut vars = self.lookup(center, &[Kind::Center])?.vars.clone();
                vars.extend([U_NAME.to_string(), V_NAME.to_string()]);
                self.declare(name, Kind::Bundle, vars, 0)?;
            }
            Op::GaCheck { space } => {
                self.lookup(space, &[Kind::Bundle])?;
            }
            Op::Reschange { center, matrix, name } => {
                let vars = self.lookup(center, &[Kind::Center])?.vars.clone();
                self.lookup(matrix, &[Kind::Matrix])?;
                self.declare(name, Kind::Center, vars, 0)?;
            }
            Op::PairIso { left, right, cert } => {
                self.lookup(left, &[Kind::Center])?;
                self.lookup(right, &[Kind::Center])?;
                self.lookup(cert, &[Kind::Certificate])?;
            }
            Op::Brieskorn { name, .. } => {
                self.declare(name, Kind::Scheme, ["x", "y", "z"].map(String::from).to_vec(), 0)?;
            }
            Op::GmCheck { .. } | Op::Trivialize => {}
            Op::DiagFamily { name } => {
                if let Some(n) = name {
                    self.declare(n, Kind::Scheme, FAMILY_VARIABLES.map(String::from).to_vec(), 0)?;
                }
            }
            Op::Fiber { point } => {
                for p in point {
                    self.constant(p)?;
                }
            }
            Op::AssertEq { left, right } => {
                self.expr_active(left)?;
                self.expr_active(right)?;
                if self.active.is_none() {
                    return Err(self.invalid("assert-eq needs an active ring".into()));
                }
            }
            Op::IsoCheck { cert } => {
                self.lookup(cert, &[Kind::Certificate])?;
            }
        }
        let outcomes = cmd.op.outcomes();
        match &cmd.expect {
            None => {}
            Some(Expect::Int(_)) if matches!(cmd.op, Op::Dim { .. }) => {}
            Some(Expect::Word(w)) if outcomes.contains(&w.as_str()) => {}
            Some(e) => {
                let allowed = if matches!(cmd.op, Op::Dim { .. }) { "an integer".to_string() } else if outcomes.is_empty() {
                    "nothing".to_string()
                } else {
                    outcomes.join(", ")
                };
                let shown = match e {
                    Expect::Word(w) => w.clone(),
                    Expect::Int(n) => n.to_string(),
                };
                return Err(self.invalid(format!("`{}` cannot expect `{shown}`; allowed: {allowed}", cmd.op.keyword())));
            }
        }
        Ok(())
    }
}
