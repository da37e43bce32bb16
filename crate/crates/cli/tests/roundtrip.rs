//! Printing a script and parsing it back gives the same syntax tree.

use proptest::prelude::*;
use sphere_forge::polyring::Expr;
use sphere_forge_cli::script::*;

const KEYWORDS: [&str; 14] =
    ["in", "expect", "with", "affine", "as", "via", "on", "at", "order", "centers", "steps", "timeout", "Q", "block"];

fn ident() -> impl Strategy<Value = String> {
    "[a-zA-Z][a-z0-9_]{0,3}".prop_filter("keyword", |s| !KEYWORDS.contains(&s.as_str()))
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(0u32..30).prop_map(|n| Expr::Int(n.into())), ident().prop_map(Expr::Name)];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |a| Expr::Neg(b(a))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Div(b(x), b(y))),
            (inner, 0u32..6).prop_map(move |(x, e)| Expr::Pow(b(x), e)),
        ]
    })
}

fn exprs(max: usize) -> impl Strategy<Value = Vec<Expr>> {
    prop::collection::vec(expr(), 1..=max)
}

fn order() -> impl Strategy<Value = Option<OrderSpec>> {
    prop_oneof![
        Just(None),
        Just(Some(OrderSpec::Grevlex)),
        Just(Some(OrderSpec::Lex)),
        prop::collection::vec(ident(), 1..3).prop_map(|v| Some(OrderSpec::Block(v))),
    ]
}

fn decl() -> impl Strategy<Value = StmtKind> {
    prop_oneof![
        (ident(), prop::collection::vec(ident(), 1..4), order())
            .prop_map(|(name, vars, order)| StmtKind::Ring { name, vars, order }),
        ident().prop_map(|name| StmtKind::Use { name }),
        (ident(), expr()).prop_map(|(name, expr)| StmtKind::Poly { name, expr }),
        (ident(), prop::collection::vec(expr(), 0..3)).prop_map(|(name, gens)| StmtKind::Ideal { name, gens }),
        (ident(), prop::option::of(ident())).prop_map(|(name, i)| StmtKind::Scheme {
            name,
            source: i.map(SchemeSource::Ideal).unwrap_or(SchemeSource::Affine)
        }),
        (ident(), expr(), expr(), ident(), exprs(3))
            .prop_map(|(name, f, g, scheme, point)| StmtKind::Center { name, f, g, scheme, point }),
        (ident(), [expr(), expr(), expr(), expr()]).prop_map(|(name, entries)| StmtKind::Matrix { name, entries }),
        (ident(), ident(), ident(), exprs(3))
            .prop_map(|(name, source, target, components)| StmtKind::Map { name, source, target, components }),
        (ident(), ident(), ident()).prop_map(|(name, forward, inverse)| StmtKind::Certificate { name, forward, inverse }),
    ]
}

fn op() -> impl Strategy<Value = Op> {
    let small = 1u32..20;
    prop_oneof![
        ident().prop_map(|ideal| Op::Groebner { ideal }),
        (expr(), ident()).prop_map(|(poly, ideal)| Op::Member { poly, ideal }),
        (expr(), ident()).prop_map(|(poly, ideal)| Op::RadicalMember { poly, ideal }),
        ident().prop_map(|target| Op::Dim { target }),
        (ident(), ident()).prop_map(|(left, right)| Op::Equal { left, right }),
        ident().prop_map(|target| Op::Smooth { target }),
        ident().prop_map(|center| Op::Support { center }),
        (ident(), ident()).prop_map(|(center, name)| Op::Build { center, name }),
        ident().prop_map(|space| Op::GaCheck { space }),
        (ident(), ident(), ident()).prop_map(|(center, matrix, name)| Op::Reschange { center, matrix, name }),
        (ident(), ident(), ident()).prop_map(|(left, right, cert)| Op::PairIso { left, right, cert }),
        (small.clone(), small.clone(), small.clone(), ident()).prop_map(|(p, q, r, name)| Op::Brieskorn { p, q, r, name }),
        (small.clone(), small.clone(), small.clone(), prop::collection::vec((small.clone(), small), 0..3))
            .prop_map(|(p, q, r, centers)| Op::GmCheck { p, q, r, centers }),
        prop::option::of(ident()).prop_map(|name| Op::DiagFamily { name }),
        Just(Op::Trivialize),
        (expr(), expr()).prop_map(|(a, b)| Op::Fiber { point: [a, b] }),
        (expr(), expr()).prop_map(|(left, right)| Op::AssertEq { left, right }),
        ident().prop_map(|cert| Op::IsoCheck { cert }),
    ]
}

fn command() -> impl Strategy<Value = StmtKind> {
    let expect = prop_oneof![
        Just(None),
        ident().prop_map(|w| Some(Expect::Word(w))),
        (-5i64..10).prop_map(|n| Some(Expect::Int(n))),
    ];
    let timeout = prop_oneof![Just(None), (0u32..100).prop_map(|n| Some(n.to_string())), Just(Some("0.25".to_string()))];
    (op(), expect, prop::option::of(0u64..1000), timeout).prop_map(|(op, expect, steps, timeout)| {
        StmtKind::Command(Command { op, expect, budget: BudgetClause { steps, timeout } })
    })
}

fn script() -> impl Strategy<Value = Script> {
    prop::collection::vec(prop_oneof![decl(), command()], 0..8)
        .prop_map(|kinds| Script { stmts: kinds.into_iter().map(Stmt::new).collect() })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn print_then_parse_is_identity(s in script()) {
        let text = s.to_string();
        let back = parse_syntax(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(back, s);
    }
}

#[test]
fn shipped_scripts_round_trip() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("scripts");
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let s = parse_script(&text).unwrap();
        assert_eq!(parse_script(&s.to_string()).unwrap(), s);
    }
}
