//! Standalone certificate files written by `--cert-out`. Each file is a
//! script in the input language that re-checks the certificate when run.

use std::io;
use std::path::Path;

use sphere_forge::bundles::{AffineScheme, CompleteIntersectionCenter, IsomorphismCertificate};
use sphere_forge::idealcalc::{Ideal, MembershipCertificate};
use sphere_forge::polyring::{parse_expr, Expr, MonomialOrder, Polynomial, PolynomialRing, Rational};

use crate::script::{Command, Op, OrderSpec, SchemeSource, Script, Stmt, StmtKind, RESERVED};

#[derive(Clone, Debug)]
pub struct CertFile {
    kind: &'static str,
    header: String,
    script: Script,
}

impl CertFile {
    pub fn script(&self) -> &Script {
        &self.script
    }

    /// Writes `NNN-kind.sf` into `dir` and returns the file name.
    pub fn write(&self, dir: &Path, index: usize) -> io::Result<String> {
        std::fs::create_dir_all(dir)?;
        let name = format!("{index:03}-{}.sf", self.kind);
        std::fs::write(dir.join(&name), format!("# {}\n{}", self.header, self.script))?;
        Ok(name)
    }
}

fn expr(p: &Polynomial) -> Expr {
    parse_expr(&p.to_string()).expect("printed polynomials parse")
}

fn number(q: &Rational) -> Expr {
    parse_expr(&q.to_string()).expect("printed rationals parse")
}

fn order_spec(ring: &PolynomialRing) -> OrderSpec {
    match ring.order() {
        MonomialOrder::Grevlex => OrderSpec::Grevlex,
        MonomialOrder::Lex => OrderSpec::Lex,
        MonomialOrder::Block { eliminate } => OrderSpec::Block(
            ring.vars().iter().zip(eliminate).filter(|(_, e)| **e).map(|(v, _)| v.clone()).collect(),
        ),
    }
}

/// Script identifiers that cannot be confused with any variable.
struct Names<'a> {
    taken: Vec<&'a [String]>,
}

impl Names<'_> {
    fn get(&self, base: &str) -> String {
        let mut n = base.to_string();
        while RESERVED.contains(&n.as_str()) || self.taken.iter().any(|vs| vs.contains(&n)) {
            n.push('_');
        }
        n
    }
}

fn cmd(op: Op) -> Stmt {
    Stmt::new(StmtKind::Command(Command::new(op)))
}

fn ring_stmt(name: &str, ring: &PolynomialRing) -> Stmt {
    Stmt::new(StmtKind::Ring { name: name.into(), vars: ring.vars().to_vec(), order: Some(order_spec(ring)) })
}

fn scheme_stmts(out: &mut Vec<Stmt>, names: &Names, prefix: &str, s: &AffineScheme) -> String {
    let ring = names.get(&format!("{prefix}_ring"));
    let scheme = names.get(prefix);
    out.push(ring_stmt(&ring, s.ring()));
    let gens = s.ideal().generators();
    let source = if gens.is_empty() {
        SchemeSource::Affine
    } else {
        let ideal = names.get(&format!("{prefix}_ideal"));
        out.push(Stmt::new(StmtKind::Ideal { name: ideal.clone(), gens: gens.iter().map(expr).collect() }));
        SchemeSource::Ideal(ideal)
    };
    out.push(Stmt::new(StmtKind::Scheme { name: scheme.clone(), source }));
    scheme
}

pub fn membership(ideal: &Ideal, c: &MembershipCertificate) -> CertFile {
    let vars = ideal.ring().vars();
    let names = Names { taken: vec![vars] };
    let (ring, id, target) = (names.get("cert_ring"), names.get("cert_ideal"), names.get("cert_target"));
    let combination = c
        .cofactors
        .iter()
        .zip(&c.generators)
        .map(|(h, g)| Expr::Mul(Box::new(expr(h)), Box::new(expr(g))))
        .reduce(|a, b| Expr::Add(Box::new(a), Box::new(b)))
        .unwrap_or_else(|| Expr::Int(0.into()));
    let stmts = vec![
        ring_stmt(&ring, ideal.ring()),
        Stmt::new(StmtKind::Ideal { name: id.clone(), gens: c.generators.iter().map(expr).collect() }),
        Stmt::new(StmtKind::Poly { name: target.clone(), expr: expr(&c.target) }),
        cmd(Op::AssertEq { left: Expr::Name(target.clone()), right: combination }),
        cmd(Op::Member { poly: Expr::Name(target), ideal: id }),
    ];
    CertFile { kind: "membership", header: "membership certificate: target = sum of cofactor * generator".into(), script: Script { stmts } }
}

pub fn isomorphism(
    k: &IsomorphismCertificate,
    centers: Option<(&CompleteIntersectionCenter, &CompleteIntersectionCenter)>,
) -> CertFile {
    let (src, tgt) = (k.source(), k.target());
    let names = Names { taken: vec![src.ring().vars(), tgt.ring().vars()] };
    let mut stmts = Vec::new();
    let s = scheme_stmts(&mut stmts, &names, "source", src);
    let t = if src == tgt { s.clone() } else { scheme_stmts(&mut stmts, &names, "target", tgt) };
    let (fwd, inv, cert) = (names.get("forward"), names.get("inverse"), names.get("cert"));
    stmts.push(Stmt::new(StmtKind::Map {
        name: fwd.clone(),
        source: s.clone(),
        target: t.clone(),
        components: k.forward().components().iter().map(expr).collect(),
    }));
    stmts.push(Stmt::new(StmtKind::Map {
        name: inv.clone(),
        source: t.clone(),
        target: s.clone(),
        components: k.inverse().components().iter().map(expr).collect(),
    }));
    stmts.push(Stmt::new(StmtKind::Certificate { name: cert.clone(), forward: fwd, inverse: inv }));
    stmts.push(cmd(Op::IsoCheck { cert: cert.clone() }));
    let mut kind = "isomorphism";
    if let Some((l, r)) = centers {
        kind = "pair-isomorphism";
        let (ln, rn) = (names.get("left"), names.get("right"));
        for (name, c, on) in [(&ln, l, &s), (&rn, r, &t)] {
            stmts.push(Stmt::new(StmtKind::Center {
                name: name.clone(),
                f: expr(c.f()),
                g: expr(c.g()),
                scheme: on.clone(),
                point: c.support_point().iter().map(number).collect(),
            }));
        }
        stmts.push(cmd(Op::PairIso { left: ln, right: rn, cert }));
    }
    CertFile { kind, header: format!("{kind} certificate: maps in both directions and their checks"), script: Script { stmts } }
}
