use std::cmp::Ordering;
use std::fmt;

/// Total multiplicative well-order on monomials.
///
/// `Block` is an elimination order: the masked variables are compared first
/// (grevlex on that block), and only ties fall through to grevlex on the
/// remaining variables. Any monomial containing a masked variable therefore
/// exceeds every monomial free of them.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Block {
        /// `eliminate[i]` is true when variable `i` belongs to the eliminated block.
        eliminate: Vec<bool>,
    },
}

impl MonomialOrder {
    /// Elimination order for the variables at `indices` in a ring of `nvars` variables.
    pub fn block(nvars: usize, indices: &[usize]) -> Self {
        let mut eliminate = vec![false; nvars];
        for &i in indices {
            eliminate[i] = true;
        }
        MonomialOrder::Block { eliminate }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::Block { .. } => "block",
        }
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex_on(a, b, |_| true),
            MonomialOrder::Block { eliminate } => grevlex_on(a, b, |i| eliminate[i])
                .then_with(|| grevlex_on(a, b, |i| !eliminate[i])),
        }
    }
}

/// Grevlex restricted to the variables selected by `keep`.
fn grevlex_on(a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
    let deg = |m: &[u32]| -> u64 {
        m.iter()
            .enumerate()
            .filter(|(i, _)| keep(*i))
            .map(|(_, &e)| e as u64)
            .sum()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.len()).rev() {
        if !keep(i) {
            continue;
        }
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            // smaller exponent on the last differing variable wins
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Block { eliminate } => {
                let idx: Vec<String> = eliminate
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e)
                    .map(|(i, _)| i.to_string())
                    .collect();
                write!(f, "block[{}]", idx.join(","))
            }
            other => f.write_str(other.name()),
        }
    }
}
