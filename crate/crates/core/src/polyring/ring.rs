use std::fmt;
use std::sync::Arc;

use super::{MonomialOrder, Polynomial};
use crate::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: Vec<String>,
    order: MonomialOrder,
}

/// `ℚ[vars]` with a fixed monomial order. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolynomialRing(Arc<RingData>);

impl PolynomialRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, order: MonomialOrder) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::Block { eliminate } = &order {
            if eliminate.len() != vars.len() {
                return Err(Error::contract(format!(
                    "block order declared for {} variables in a ring with {}",
                    eliminate.len(),
                    vars.len()
                )));
            }
        }
        Ok(PolynomialRing(Arc::new(RingData { vars, order })))
    }

    /// Grevlex ring; panics on duplicate names, intended for literals in code.
    pub fn grevlex(vars: &[&str]) -> Self {
        Self::new(vars.iter().copied(), MonomialOrder::Grevlex).expect("distinct variable names")
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        if &order == self.order() {
            return Ok(self.clone());
        }
        Self::new(self.0.vars.iter().cloned(), order)
    }

    /// Appends fresh variables; the order becomes the default grevlex unless it
    /// was lex, which is kept.
    pub fn extend<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars = self.0.vars.iter().cloned().chain(extra.into_iter().map(Into::into));
        let order = match self.order() {
            MonomialOrder::Lex => MonomialOrder::Lex,
            _ => MonomialOrder::Grevlex,
        };
        Self::new(vars, order)
    }

    /// A variable name that does not clash with any ring variable.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    /// Same variable names in the same positions (orders may differ).
    pub fn same_variables(&self, other: &PolynomialRing) -> bool {
        self.0.vars == other.0.vars
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        let i = self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(self, i))
    }

    /// All ring variables as polynomials, in declaration order.
    pub fn gens(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| Polynomial::var(self, i)).collect()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        super::parse_polynomial(self, text)
    }
}

impl fmt::Display for PolynomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}] ({})", self.0.vars.join(","), self.0.order)
    }
}
