use std::collections::HashMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use sphere_forge::bundles::{
    brieskorn, build_total_space, gm_weight_check, resolution_change, verify_ga_action, verify_pair_isomorphism,
    verify_support, AffineScheme, BundleTotalSpace, CertificateCheck, CompleteIntersectionCenter, IsomorphismCertificate,
    PairVerdict, RegularMap, ResolutionChange, SupportFailure, SupportOutcome,
};
use sphere_forge::families::{build_diagonal_family, restrict_fiber, verify_trivialization, DiagonalFamily};
use sphere_forge::idealcalc::{
    dimension, ideal_equality, ideal_membership, radical_membership, smoothness_check, Ideal, Indeterminacy,
    SmoothnessVerdict,
};
use sphere_forge::polyring::{Budget, Expr, MonomialOrder, Polynomial, PolynomialRing, Rational};
use sphere_forge::{Error, Result};

use crate::certs;
use crate::report::{Entry, Report, Verdict};
use crate::script::{Command, Expect, Op, OrderSpec, SchemeSource, Script, Stmt, StmtKind};

#[derive(Clone, Debug)]
pub struct Options {
    pub budget: Budget,
    /// Order for `ring` declarations without an `order` clause.
    pub default_order: OrderSpec,
    pub cert_out: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Self {
        Options { budget: Budget::default(), default_order: OrderSpec::Grevlex, cert_out: None }
    }
}

#[derive(Clone, Debug)]
enum Object {
    Ring(PolynomialRing),
    Poly(Polynomial),
    Ideal(Ideal),
    Scheme(AffineScheme),
    Bundle(BundleTotalSpace),
    Center(CompleteIntersectionCenter),
    Matrix([Expr; 4]),
    Map(RegularMap),
    Cert(IsomorphismCertificate),
}

/// What a command produced, before expectations are applied.
struct Outcome {
    outcome: String,
    detail: Value,
    /// False for purely informational results.
    checked: bool,
    cert: Option<certs::CertFile>,
}

impl Outcome {
    fn info(outcome: impl Into<String>, detail: Value) -> Self {
        Outcome { outcome: outcome.into(), detail, checked: false, cert: None }
    }

    fn check(outcome: impl Into<String>, detail: Value) -> Self {
        Outcome { outcome: outcome.into(), detail, checked: true, cert: None }
    }

    fn pass_fail(ok: bool, detail: Value) -> Self {
        Outcome::check(if ok { "pass" } else { "fail" }, detail)
    }

    fn bool(b: bool, detail: Value) -> Self {
        Outcome::check(b.to_string(), detail)
    }
}

enum Failure {
    Budget(String),
    Error(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget(b) => Failure::Budget(b.to_string()),
            other => Failure::Error(other.to_string()),
        }
    }
}

type Step<T> = std::result::Result<T, Failure>;

pub struct Executor {
    options: Options,
    env: HashMap<String, Object>,
    active: Option<PolynomialRing>,
    family: Option<DiagonalFamily>,
    index: usize,
}

pub fn order_of(spec: &OrderSpec, vars: &[String]) -> MonomialOrder {
    match spec {
        OrderSpec::Grevlex => MonomialOrder::Grevlex,
        OrderSpec::Lex => MonomialOrder::Lex,
        OrderSpec::Block(names) => {
            let idx: Vec<usize> = names.iter().filter_map(|n| vars.iter().position(|v| v == n)).collect();
            MonomialOrder::block(vars.len(), &idx)
        }
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn rationals(qs: &[Rational]) -> Vec<String> {
    qs.iter().map(|q| q.to_string()).collect()
}

fn check_json(c: &CertificateCheck) -> Value {
    json!({
        "forward_well_defined": c.forward_well_defined,
        "inverse_well_defined": c.inverse_well_defined,
        "source_identity": c.source_identity,
        "target_identity": c.target_identity,
    })
}

fn map_json(m: &RegularMap) -> Value {
    json!({ "source": m.source().ring().vars(), "target": m.target().ring().vars(), "components": strings(m.components()) })
}

fn support_failure(f: &SupportFailure) -> String {
    match f {
        SupportFailure::EmptySupport => "the center has no points".into(),
        SupportFailure::NotZeroDimensional { dimension } => format!("the center has dimension {dimension}"),
        SupportFailure::NotSupportedAtPoint { variable } => {
            format!("the coordinate function of `{variable}` minus its value is not in the radical")
        }
    }
}

impl Executor {
    pub fn new(options: Options) -> Self {
        Executor { options, env: HashMap::new(), active: None, family: None, index: 0 }
    }

    fn settings(&self) -> Value {
        json!({
            "gb_steps": self.options.budget.max_steps,
            "timeout_seconds": self.options.budget.timeout.map(|t| t.as_secs_f64()),
            "default_order": self.options.default_order.to_string(),
        })
    }

    /// Runs every statement in order. A failing declaration, or a runtime
    /// error in any statement, stops execution; failed checks and exhausted
    /// budgets in plain commands do not.
    pub fn run(mut self, script: &Script) -> Report {
        let start = Instant::now();
        let mut report = Report { settings: self.settings(), ..Report::default() };
        for stmt in &script.stmts {
            let t0 = Instant::now();
            let entry = match &stmt.kind {
                StmtKind::Command(cmd) => {
                    self.index += 1;
                    let budget = self.budget_for(cmd);
                    let res = self.command(cmd, &budget);
                    Some(self.entry(stmt, cmd, &budget, res, t0.elapsed()))
                }
                kind => match self.declare(kind) {
                    Ok(()) => None,
                    Err(f) => {
                        self.index += 1;
                        let (verdict, outcome, message) = match f {
                            Failure::Budget(m) => (Verdict::Budget, "budget-exhausted", m),
                            Failure::Error(m) => (Verdict::Error, "error", m),
                        };
                        Some(Entry {
                            index: self.index,
                            line: stmt.line,
                            command: kind.to_string(),
                            verdict,
                            outcome: outcome.into(),
                            expected: None,
                            detail: json!({ "message": message }),
                            budget: Value::Null,
                            certificate_file: None,
                            elapsed: t0.elapsed(),
                        })
                    }
                },
            };
            if let Some(e) = entry {
                let stop = e.verdict == Verdict::Error || (e.verdict == Verdict::Budget && declares(stmt));
                let line = e.line;
                report.entries.push(e);
                if stop {
                    report.aborted = Some(format!("stopped after line {line}"));
                    break;
                }
            }
        }
        report.total = start.elapsed();
        report
    }

    fn budget_for(&self, cmd: &Command) -> Budget {
        let mut b = self.options.budget;
        if let Some(s) = cmd.budget.steps {
            b.max_steps = Some(s);
        }
        if let Some(t) = &cmd.budget.timeout {
            // validated by the parser to be a decimal literal
            b.timeout = Some(Duration::from_secs_f64(t.parse().unwrap_or(0.0)));
        }
        b
    }

    fn entry(&mut self, stmt: &Stmt, cmd: &Command, budget: &Budget, res: Step<Outcome>, elapsed: Duration) -> Entry {
        let budget_json = json!({
            "steps": budget.max_steps,
            "timeout_seconds": budget.timeout.map(|t| t.as_secs_f64()),
        });
        let mut e = Entry {
            index: self.index,
            line: stmt.line,
            command: cmd.to_string(),
            verdict: Verdict::Info,
            outcome: String::new(),
            expected: None,
            detail: Value::Null,
            budget: budget_json,
            certificate_file: None,
            elapsed,
        };
        match res {
            Err(Failure::Budget(m)) => {
                e.verdict = Verdict::Budget;
                e.outcome = "budget-exhausted".into();
                e.detail = json!({ "message": m });
            }
            Err(Failure::Error(m)) => {
                e.verdict = Verdict::Error;
                e.outcome = "error".into();
                e.detail = json!({ "message": m });
            }
            Ok(out) => {
                let expected = match (&cmd.expect, cmd.op.outcomes().first()) {
                    (Some(Expect::Word(w)), _) => Some(w.clone()),
                    (Some(Expect::Int(n)), _) => Some(n.to_string()),
                    (None, Some(d)) if out.checked => Some(d.to_string()),
                    _ => None,
                };
                e.verdict = match &expected {
                    Some(x) if *x == out.outcome => Verdict::Pass,
                    Some(_) => Verdict::Fail,
                    None => Verdict::Info,
                };
                e.expected = expected;
                e.outcome = out.outcome;
                e.detail = out.detail;
                if e.verdict == Verdict::Pass {
                    if let (Some(dir), Some(cert)) = (&self.options.cert_out, out.cert) {
                        match cert.write(dir, self.index) {
                            Ok(name) => e.certificate_file = Some(name),
                            Err(err) => {
                                e.verdict = Verdict::Error;
                                e.detail = json!({ "message": format!("writing certificate: {err}") });
                            }
                        }
                    }
                }
            }
        }
        e
    }

    fn eval(&self, e: &Expr, ring: &PolynomialRing) -> Result<Polynomial> {
        let lookup = |n: &str| match self.env.get(n) {
            Some(Object::Poly(p)) => Some(p.clone()),
            _ => None,
        };
        e.eval(ring, &lookup)
    }

    fn constant(&self, e: &Expr) -> Result<Rational> {
        let q = PolynomialRing::grevlex(&[]);
        let p = self.eval(e, &q)?;
        Ok(p.constant_value().expect("no variables"))
    }

    fn active(&self) -> Result<&PolynomialRing> {
        self.active.as_ref().ok_or_else(|| Error::Contract("no active ring".into()))
    }

    fn get(&self, name: &str) -> Result<&Object> {
        self.env
            .get(name)
            .ok_or_else(|| Error::Contract(format!("`{name}` is unavailable because the command defining it did not succeed")))
    }

    fn ideal(&self, name: &str) -> Result<Ideal> {
        Ok(match self.get(name)? {
            Object::Ideal(i) => i.clone(),
            Object::Scheme(s) => s.ideal().clone(),
            Object::Bundle(b) => b.total().ideal().clone(),
            _ => return Err(Error::Contract(format!("`{name}` is not an ideal or scheme"))),
        })
    }

    fn scheme(&self, name: &str) -> Result<AffineScheme> {
        Ok(match self.get(name)? {
            Object::Scheme(s) => s.clone(),
            Object::Bundle(b) => b.total().clone(),
            _ => return Err(Error::Contract(format!("`{name}` is not a scheme"))),
        })
    }

    fn center(&self, name: &str) -> Result<CompleteIntersectionCenter> {
        match self.get(name)? {
            Object::Center(c) => Ok(c.clone()),
            _ => Err(Error::Contract(format!("`{name}` is not a center"))),
        }
    }

    fn map(&self, name: &str) -> Result<RegularMap> {
        match self.get(name)? {
            Object::Map(m) => Ok(m.clone()),
            _ => Err(Error::Contract(format!("`{name}` is not a map"))),
        }
    }

    fn cert(&self, name: &str) -> Result<IsomorphismCertificate> {
        match self.get(name)? {
            Object::Cert(c) => Ok(c.clone()),
            _ => Err(Error::Contract(format!("`{name}` is not a certificate"))),
        }
    }

    fn ring_of(&self, v: &Object) -> Option<PolynomialRing> {
        Some(match v {
            Object::Ring(r) => r.clone(),
            Object::Ideal(i) => i.ring().clone(),
            Object::Scheme(s) => s.ring().clone(),
            Object::Bundle(b) => b.ring().clone(),
            Object::Center(c) => c.ambient().ring().clone(),
            _ => return None,
        })
    }

    fn declare(&mut self, kind: &StmtKind) -> Step<()> {
        let budget = self.options.budget;
        let (name, value) = match kind {
            StmtKind::Ring { name, vars, order } => {
                let spec = order.as_ref().unwrap_or(&self.options.default_order);
                let ring = PolynomialRing::new(vars.iter().cloned(), order_of(spec, vars))?;
                self.active = Some(ring.clone());
                (name, Object::Ring(ring))
            }
            StmtKind::Use { name } => {
                let ring = self.ring_of(self.get(name)?).ok_or_else(|| Error::Contract(format!("`{name}` has no ring")))?;
                self.active = Some(ring);
                return Ok(());
            }
            StmtKind::Poly { name, expr } => (name, Object::Poly(self.eval(expr, self.active()?)?)),
            StmtKind::Ideal { name, gens } => {
                let ring = self.active()?.clone();
                let gens = gens.iter().map(|g| self.eval(g, &ring)).collect::<Result<Vec<_>>>()?;
                (name, Object::Ideal(Ideal::new(&ring, gens)?))
            }
            StmtKind::Scheme { name, source } => {
                let s = match source {
                    SchemeSource::Affine => AffineScheme::affine_space(self.active()?),
                    SchemeSource::Ideal(i) => AffineScheme::new(self.ideal(i)?, &budget)?,
                };
                (name, Object::Scheme(s))
            }
            StmtKind::Center { name, f, g, scheme, point } => {
                let s = self.scheme(scheme)?;
                let f = self.eval(f, s.ring())?;
                let g = self.eval(g, s.ring())?;
                let point = point.iter().map(|p| self.constant(p)).collect::<Result<Vec<_>>>()?;
                (name, Object::Center(CompleteIntersectionCenter::new(&s, f, g, point)?))
            }
            StmtKind::Matrix { name, entries } => (name, Object::Matrix(entries.clone())),
            StmtKind::Map { name, source, target, components } => {
                let (s, t) = (self.scheme(source)?, self.scheme(target)?);
                let comps = components.iter().map(|c| self.eval(c, s.ring())).collect::<Result<Vec<_>>>()?;
                (name, Object::Map(RegularMap::new(&s, &t, comps)?))
            }
            StmtKind::Certificate { name, forward, inverse } => {
                (name, Object::Cert(IsomorphismCertificate::new(self.map(forward)?, self.map(inverse)?)?))
            }
            StmtKind::Command(_) => unreachable!("commands are not declarations"),
        };
        self.env.insert(name.clone(), value);
        Ok(())
    }

    fn family(&mut self, budget: &Budget) -> Result<DiagonalFamily> {
        if self.family.is_none() {
            self.family = Some(build_diagonal_family(budget)?);
        }
        Ok(self.family.clone().expect("just built"))
    }

    fn command(&mut self, cmd: &Command, b: &Budget) -> Step<Outcome> {
        Ok(match &cmd.op {
            Op::Groebner { ideal } => {
                let i = self.ideal(ideal)?;
                let gb = i.groebner(i.ring().order(), b)?;
                Outcome::info(
                    format!("{} elements", gb.len()),
                    json!({ "order": i.ring().order().name(), "basis": strings(gb.elements()), "steps": gb.steps() }),
                )
            }
            Op::Member { poly, ideal } => {
                let i = self.ideal(ideal)?;
                let h = self.eval(poly, i.ring())?;
                let m = ideal_membership(&h, &i, true, b)?;
                let mut detail = json!({ "polynomial": h.to_string(), "member": m.member });
                let mut cert = None;
                if let Some(c) = &m.certificate {
                    detail["certificate"] = json!({ "cofactors": strings(&c.cofactors), "verified": c.verify() });
                    if !c.verify() {
                        return Err(Failure::Error("membership certificate failed to expand".into()));
                    }
                    cert = Some(certs::membership(&i, c));
                }
                Outcome { cert, ..Outcome::bool(m.member, detail) }
            }
            Op::RadicalMember { poly, ideal } => {
                let i = self.ideal(ideal)?;
                let h = self.eval(poly, i.ring())?;
                let r = radical_membership(&h, &i, b)?;
                Outcome::bool(r, json!({ "polynomial": h.to_string(), "member": r }))
            }
            Op::Dim { target } => {
                let d = dimension(&self.ideal(target)?, b)?;
                let detail = json!({ "dimension": d });
                if cmd.expect.is_some() {
                    Outcome::check(d.to_string(), detail)
                } else {
                    Outcome::info(d.to_string(), detail)
                }
            }
            Op::Equal { left, right } => {
                let (l, r) = (self.ideal(left)?, self.ideal(right)?);
                let eq = ideal_equality(&l, &r, b)?;
                Outcome::bool(eq, json!({ "equal": eq }))
            }
            Op::Smooth { target } => {
                let i = self.ideal(target)?;
                match smoothness_check(&i, b)? {
                    SmoothnessVerdict::Smooth { dimension, codimension } => {
                        Outcome::check("smooth", json!({ "dimension": dimension, "codimension": codimension }))
                    }
                    SmoothnessVerdict::Singular { dimension, codimension, witness } => Outcome::check(
                        "singular",
                        json!({ "dimension": dimension, "codimension": codimension, "witness": strings(witness.generators()) }),
                    ),
                    SmoothnessVerdict::Indeterminate(Indeterminacy::Budget(e)) => return Err(Failure::Budget(e.to_string())),
                    SmoothnessVerdict::Indeterminate(Indeterminacy::NotCompleteIntersection { generators, codimension }) => {
                        Outcome::check(
                            "indeterminate",
                            json!({
                                "reason": "not a complete intersection presentation",
                                "generators": generators,
                                "codimension": codimension,
                            }),
                        )
                    }
                }
            }
            Op::Support { center } => {
                let c = self.center(center)?;
                match verify_support(&c, b)? {
                    SupportOutcome::Verified(v) => {
                        self.env.insert(center.clone(), Object::Center(v));
                        Outcome::check("verified", json!({ "point": rationals(c.support_point()) }))
                    }
                    SupportOutcome::Failed(f) => Outcome::check("failed", json!({ "reason": support_failure(&f) })),
                    SupportOutcome::Indeterminate(e) => return Err(Failure::Budget(e.to_string())),
                }
            }
            Op::Build { center, name } => {
                let c = self.center(center)?;
                let t = build_total_space(c.ambient(), &c, false)?;
                let detail = json!({
                    "ring": t.ring().vars(),
                    "equation": t.equation().to_string(),
                    "ideal": strings(t.total().ideal().generators()),
                });
                self.env.insert(name.clone(), Object::Bundle(t));
                Outcome::info("built", detail)
            }
            Op::GaCheck { space } => {
                let t = match self.get(space)? {
                    Object::Bundle(t) => t.clone(),
                    _ => return Err(Failure::Error(format!("`{space}` is not a total space"))),
                };
                let rep = verify_ga_action(&t, b)?;
                Outcome::pass_fail(
                    rep.passed(),
                    json!({
                        "invariance_residue": rep.invariance_residue.to_string(),
                        "fixed_point_free": rep.fixed_point_free,
                    }),
                )
            }
            Op::Reschange { center, matrix, name } => {
                let c = self.center(center)?;
                let entries = match self.get(matrix)? {
                    Object::Matrix(m) => m.clone(),
                    _ => return Err(Failure::Error(format!("`{matrix}` is not a matrix"))),
                };
                let ring = c.ambient().ring().clone();
                let [a, bb, cc, d] = entries.each_ref().map(|e| self.eval(e, &ring));
                let change = match ResolutionChange::new(c.ambient(), a?, bb?, cc?, d?, b) {
                    Err(Error::NonUnitDeterminant(det)) => {
                        return Ok(Outcome::check(
                            "fail",
                            json!({ "reason": "determinant is not a nonzero constant on the base", "determinant": det }),
                        ))
                    }
                    other => other?,
                };
                let rep = resolution_change(&c, &change, b)?;
                let detail = json!({
                    "determinant": change.determinant().to_string(),
                    "new_center": [rep.new_center.f().to_string(), rep.new_center.g().to_string()],
                    "forward": map_json(rep.automorphism.forward()),
                    "inverse": map_json(rep.automorphism.inverse()),
                    "certificate": check_json(&rep.certificate_check),
                    "equation_preserved": rep.equation_preserved,
                    "centers_equal": rep.centers_equal,
                });
                let passed = rep.passed();
                let cert = passed.then(|| certs::isomorphism(&rep.automorphism, None));
                self.env.insert(name.clone(), Object::Center(rep.new_center));
                Outcome { cert, ..Outcome::pass_fail(passed, detail) }
            }
            Op::PairIso { left, right, cert } => {
                let (l, r, k) = (self.center(left)?, self.center(right)?, self.cert(cert)?);
                match verify_pair_isomorphism(&l, &r, &k, b)? {
                    PairVerdict::PairsIsomorphic => Outcome {
                        cert: Some(certs::isomorphism(&k, Some((&l, &r)))),
                        ..Outcome::check("isomorphic", json!({}))
                    },
                    PairVerdict::CenterMismatch => Outcome::check(
                        "mismatch",
                        json!({ "note": "the certificate does not carry one center onto the other; other isomorphisms are not ruled out" }),
                    ),
                    PairVerdict::CertificateInvalid(c) => Outcome::check("invalid", json!({ "certificate": check_json(&c) })),
                    PairVerdict::Indeterminate(e) => return Err(Failure::Budget(e.to_string())),
                }
            }
            Op::Brieskorn { p, q, r, name } => {
                let s = brieskorn(*p, *q, *r)?;
                let detail = json!({ "equation": s.equation().to_string(), "singular_point": rationals(&s.singular_point) });
                self.env.insert(name.clone(), Object::Scheme(s.scheme));
                Outcome::info("declared", detail)
            }
            Op::GmCheck { p, q, r, centers } => {
                let rep = gm_weight_check(*p, *q, *r, centers)?;
                let detail = json!({
                    "weights": [rep.weights.0, rep.weights.1, rep.weights.2],
                    "degree": rep.degree,
                    "identity_holds": rep.identity_holds,
                    "unit_specialization_is_identity": rep.unit_specialization_is_identity,
                    "centers": rep.centers.iter().map(|c| json!({ "m": c.m, "n": c.n, "preserved": c.preserved })).collect::<Vec<_>>(),
                    "z_weight_qr_preserves_equation": rep.z_weight_qr_works,
                    "note": "the action uses weight pq on z; weight qr on z does not preserve the equation",
                });
                Outcome::pass_fail(rep.passed(), detail)
            }
            Op::DiagFamily { name } => {
                let fam = self.family(b)?;
                if let SmoothnessVerdict::Indeterminate(Indeterminacy::Budget(e)) = fam.smoothness() {
                    return Err(Failure::Budget(e.to_string()));
                }
                let detail = json!({
                    "ring": fam.ring().vars(),
                    "generator": fam.generator().to_string(),
                    "dimension": fam.dimension(),
                    "smooth": fam.smoothness().is_smooth(),
                });
                if let Some(n) = name {
                    self.env.insert(n.clone(), Object::Scheme(fam.total().clone()));
                }
                Outcome::pass_fail(fam.dimension() == 5 && fam.smoothness().is_smooth(), detail)
            }
            Op::Trivialize => {
                let fam = self.family(b)?;
                let rep = verify_trivialization(&fam)?;
                let detail = json!({
                    "phi": map_json(&rep.phi),
                    "psi": map_json(&rep.psi),
                    "pullback_matches": rep.pullback_matches,
                    "psi_after_phi": rep.psi_after_phi,
                    "phi_after_psi": rep.phi_after_psi,
                    "base_commutes": rep.base_commutes,
                    "sample_point": rationals(&rep.sample_point),
                    "sample_image": rationals(&rep.sample_image),
                    "sample_on_target": rep.sample_on_target,
                });
                let cert = if rep.passed() {
                    Some(certs::isomorphism(&IsomorphismCertificate::new(rep.phi.clone(), rep.psi.clone())?, None))
                } else {
                    None
                };
                Outcome { cert, ..Outcome::pass_fail(rep.passed(), detail) }
            }
            Op::Fiber { point } => {
                let p = (self.constant(&point[0])?, self.constant(&point[1])?);
                let fam = self.family(b)?;
                let rep = restrict_fiber(&fam, p, b)?;
                let detail = json!({
                    "point": [rep.point.0.to_string(), rep.point.1.to_string()],
                    "fiber": strings(rep.fiber.ideal().generators()),
                    "direct": strings(rep.direct_renamed.generators()),
                    "renaming": rep.renaming.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
                    "equal": rep.equal,
                    "translation_consistent": rep.translation_consistent,
                });
                Outcome::pass_fail(rep.passed(), detail)
            }
            Op::AssertEq { left, right } => {
                let ring = self.active()?.clone();
                let (l, r) = (self.eval(left, &ring)?, self.eval(right, &ring)?);
                let eq = l == r;
                Outcome::bool(eq, json!({ "left": l.to_string(), "right": r.to_string() }))
            }
            Op::IsoCheck { cert } => {
                let k = self.cert(cert)?;
                let c = k.verify(b)?;
                Outcome { cert: c.passed().then(|| certs::isomorphism(&k, None)), ..Outcome::pass_fail(c.passed(), check_json(&c)) }
            }
        })
    }
}

fn declares(stmt: &Stmt) -> bool {
    !matches!(stmt.kind, StmtKind::Command(_)) || stmt.kind.declares().is_some()
}

/// Parses nothing; runs an already checked script.
pub fn execute(script: &Script, options: Options) -> Report {
    Executor::new(options).run(script)
}
