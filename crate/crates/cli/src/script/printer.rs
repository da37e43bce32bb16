use std::fmt;

use sphere_forge::polyring::Expr;

use super::ast::*;

fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.kind)
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::Grevlex => f.write_str("grevlex"),
            OrderSpec::Lex => f.write_str("lex"),
            OrderSpec::Block(v) => {
                f.write_str("block(")?;
                list(f, v)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for StmtKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StmtKind::Ring { name, vars, order } => {
                write!(f, "ring {name} = Q[")?;
                list(f, vars)?;
                f.write_str("]")?;
                if let Some(o) = order {
                    write!(f, " order {o}")?;
                }
                Ok(())
            }
            StmtKind::Use { name } => write!(f, "use {name}"),
            StmtKind::Poly { name, expr } => write!(f, "poly {name} = {expr}"),
            StmtKind::Ideal { name, gens } => {
                write!(f, "ideal {name} =")?;
                if !gens.is_empty() {
                    f.write_str(" ")?;
                    list(f, gens)?;
                }
                Ok(())
            }
            StmtKind::Scheme { name, source: SchemeSource::Affine } => write!(f, "scheme {name} = affine"),
            StmtKind::Scheme { name, source: SchemeSource::Ideal(i) } => write!(f, "scheme {name} = {i}"),
            StmtKind::Center { name, f: a, g, scheme, point } => {
                write!(f, "center {name} = ({a}, {g}) on {scheme} at (")?;
                list(f, point)?;
                f.write_str(")")
            }
            StmtKind::Matrix { name, entries: [a, b, c, d] } => write!(f, "matrix {name} = [[{a}, {b}], [{c}, {d}]]"),
            StmtKind::Map { name, source, target, components } => {
                write!(f, "map {name}: {source} -> {target} = (")?;
                list(f, components)?;
                f.write_str(")")
            }
            StmtKind::Certificate { name, forward, inverse } => write!(f, "certificate {name} = {forward}, {inverse}"),
            StmtKind::Command(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.op)?;
        match &self.expect {
            Some(Expect::Word(w)) => write!(f, " expect {w}")?,
            Some(Expect::Int(n)) => write!(f, " expect {n}")?,
            None => {}
        }
        if !self.budget.is_empty() {
            f.write_str(" with")?;
            if let Some(s) = self.budget.steps {
                write!(f, " steps {s}")?;
            }
            if let Some(t) = &self.budget.timeout {
                write!(f, " timeout {t}")?;
            }
        }
        Ok(())
    }
}

fn pair(f: &mut fmt::Formatter<'_>, a: &Expr, b: &Expr) -> fmt::Result {
    write!(f, "({a}, {b})")
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kw = self.keyword();
        match self {
            Op::Groebner { ideal } => write!(f, "{kw} {ideal}"),
            Op::Member { poly, ideal } | Op::RadicalMember { poly, ideal } => write!(f, "{kw} {poly} in {ideal}"),
            Op::Dim { target } | Op::Smooth { target } => write!(f, "{kw} {target}"),
            Op::Equal { left, right } => write!(f, "{kw} {left}, {right}"),
            Op::Support { center } => write!(f, "{kw} {center}"),
            Op::Build { center, name } => write!(f, "{kw} {center} as {name}"),
            Op::GaCheck { space } => write!(f, "{kw} {space}"),
            Op::Reschange { center, matrix, name } => write!(f, "{kw} {center}, {matrix} as {name}"),
            Op::PairIso { left, right, cert } => write!(f, "{kw} {left}, {right} via {cert}"),
            Op::Brieskorn { p, q, r, name } => write!(f, "{kw} {p}, {q}, {r} as {name}"),
            Op::GmCheck { p, q, r, centers } => {
                write!(f, "{kw} {p}, {q}, {r}")?;
                if !centers.is_empty() {
                    f.write_str(" centers ")?;
                    for (i, (m, n)) in centers.iter().enumerate() {
                        if i > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "({m}, {n})")?;
                    }
                }
                Ok(())
            }
            Op::DiagFamily { name: Some(n) } => write!(f, "{kw} as {n}"),
            Op::DiagFamily { name: None } | Op::Trivialize => f.write_str(kw),
            Op::Fiber { point: [a, b] } => {
                write!(f, "{kw} ")?;
                pair(f, a, b)
            }
            Op::AssertEq { left, right } => write!(f, "{kw} {left}, {right}"),
            Op::IsoCheck { cert } => write!(f, "{kw} {cert}"),
        }
    }
}
