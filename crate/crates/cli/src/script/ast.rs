use sphere_forge::polyring::Expr;

#[derive(Clone, Debug, Default)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

impl PartialEq for Script {
    fn eq(&self, other: &Self) -> bool {
        self.stmts == other.stmts
    }
}

/// A statement with the position of its first token. Equality ignores the
/// position so that reprinted scripts compare equal.
#[derive(Clone, Debug)]
pub struct Stmt {
    pub line: usize,
    pub column: usize,
    pub kind: StmtKind,
}

impl Stmt {
    pub fn new(kind: StmtKind) -> Self {
        Stmt { line: 0, column: 0, kind }
    }
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Grevlex,
    Lex,
    /// Block order eliminating the listed variables first.
    Block(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeSource {
    /// Affine space over the active ring.
    Affine,
    Ideal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Ring { name: String, vars: Vec<String>, order: Option<OrderSpec> },
    Use { name: String },
    Poly { name: String, expr: Expr },
    Ideal { name: String, gens: Vec<Expr> },
    Scheme { name: String, source: SchemeSource },
    Center { name: String, f: Expr, g: Expr, scheme: String, point: Vec<Expr> },
    Matrix { name: String, entries: [Expr; 4] },
    Map { name: String, source: String, target: String, components: Vec<Expr> },
    Certificate { name: String, forward: String, inverse: String },
    Command(Command),
}

impl StmtKind {
    /// Identifier introduced by this statement, if any.
    pub fn declares(&self) -> Option<&str> {
        match self {
            StmtKind::Ring { name, .. }
            | StmtKind::Poly { name, .. }
            | StmtKind::Ideal { name, .. }
            | StmtKind::Scheme { name, .. }
            | StmtKind::Center { name, .. }
            | StmtKind::Matrix { name, .. }
            | StmtKind::Map { name, .. }
            | StmtKind::Certificate { name, .. } => Some(name),
            StmtKind::Use { .. } => None,
            StmtKind::Command(c) => c.op.declares(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expect {
    Word(String),
    Int(i64),
}

/// Per-command override of the global budget. `timeout` keeps the literal
/// text (`0.5`, `10`) so that printing is exact.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BudgetClause {
    pub steps: Option<u64>,
    pub timeout: Option<String>,
}

impl BudgetClause {
    pub fn is_empty(&self) -> bool {
        self.steps.is_none() && self.timeout.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub op: Op,
    pub expect: Option<Expect>,
    pub budget: BudgetClause,
}

impl Command {
    pub fn new(op: Op) -> Self {
        Command { op, expect: None, budget: BudgetClause::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Groebner { ideal: String },
    Member { poly: Expr, ideal: String },
    RadicalMember { poly: Expr, ideal: String },
    Dim { target: String },
    Equal { left: String, right: String },
    Smooth { target: String },
    Support { center: String },
    Build { center: String, name: String },
    GaCheck { space: String },
    Reschange { center: String, matrix: String, name: String },
    PairIso { left: String, right: String, cert: String },
    Brieskorn { p: u32, q: u32, r: u32, name: String },
    GmCheck { p: u32, q: u32, r: u32, centers: Vec<(u32, u32)> },
    DiagFamily { name: Option<String> },
    Trivialize,
    Fiber { point: [Expr; 2] },
    AssertEq { left: Expr, right: Expr },
    IsoCheck { cert: String },
}

impl Op {
    pub fn keyword(&self) -> &'static str {
        match self {
            Op::Groebner { .. } => "groebner",
            Op::Member { .. } => "member",
            Op::RadicalMember { .. } => "radical-member",
            Op::Dim { .. } => "dim",
            Op::Equal { .. } => "equal",
            Op::Smooth { .. } => "smooth",
            Op::Support { .. } => "support",
            Op::Build { .. } => "build",
            Op::GaCheck { .. } => "ga-check",
            Op::Reschange { .. } => "reschange",
            Op::PairIso { .. } => "pair-iso",
            Op::Brieskorn { .. } => "brieskorn",
            Op::GmCheck { .. } => "gm-check",
            Op::DiagFamily { .. } => "diag-family",
            Op::Trivialize => "trivialize",
            Op::Fiber { .. } => "fiber",
            Op::AssertEq { .. } => "assert-eq",
            Op::IsoCheck { .. } => "iso-check",
        }
    }

    pub fn declares(&self) -> Option<&str> {
        match self {
            Op::Build { name, .. } | Op::Reschange { name, .. } | Op::Brieskorn { name, .. } => Some(name),
            Op::DiagFamily { name } => name.as_deref(),
            _ => None,
        }
    }

    /// Words accepted after `expect`, the first being the default outcome.
    /// Empty for commands that take an integer or no expectation.
    pub fn outcomes(&self) -> &'static [&'static str] {
        match self {
            Op::Member { .. } | Op::RadicalMember { .. } | Op::Equal { .. } | Op::AssertEq { .. } => &["true", "false"],
            Op::GaCheck { .. } | Op::IsoCheck { .. } | Op::Reschange { .. } => &["pass", "fail"],
            Op::GmCheck { .. } | Op::Trivialize | Op::Fiber { .. } | Op::DiagFamily { .. } => &["pass", "fail"],
            Op::Smooth { .. } => &["smooth", "singular", "indeterminate"],
            Op::Support { .. } => &["verified", "failed"],
            Op::PairIso { .. } => &["isomorphic", "mismatch", "invalid"],
            Op::Groebner { .. } | Op::Dim { .. } | Op::Build { .. } | Op::Brieskorn { .. } => &[],
        }
    }
}

pub const COMMANDS: [&str; 18] = [
    "groebner",
    "member",
    "radical-member",
    "dim",
    "equal",
    "smooth",
    "support",
    "build",
    "ga-check",
    "reschange",
    "pair-iso",
    "brieskorn",
    "gm-check",
    "diag-family",
    "trivialize",
    "fiber",
    "assert-eq",
    "iso-check",
];

pub const DECLARATIONS: [&str; 9] = ["ring", "use", "poly", "ideal", "scheme", "center", "matrix", "map", "certificate"];
