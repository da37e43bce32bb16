use std::fmt;
use std::sync::OnceLock;

use crate::idealcalc::{self, Ideal, SmoothnessVerdict};
use crate::polyring::{Budget, GroebnerBasis, PolynomialRing};
use crate::{Error, Result};

/// Closed subscheme of affine space given by its defining ideal.
///
/// Dimension and smoothness are computed on demand and cached; a verdict
/// cut short by the budget is never cached.
#[derive(Clone, Debug)]
pub struct AffineScheme {
    ideal: Ideal,
    dimension: OnceLock<i64>,
    smoothness: OnceLock<SmoothnessVerdict>,
}

impl PartialEq for AffineScheme {
    fn eq(&self, other: &Self) -> bool {
        self.ideal == other.ideal
    }
}

impl Eq for AffineScheme {}

impl AffineScheme {
    /// Rejects the unit ideal (empty scheme).
    pub fn new(ideal: Ideal, budget: &Budget) -> Result<Self> {
        if idealcalc::variety_is_empty(&ideal, budget)? {
            return Err(Error::contract(format!("the ideal {ideal} defines the empty scheme")));
        }
        Ok(Self::new_unchecked(ideal))
    }

    pub(crate) fn new_unchecked(ideal: Ideal) -> Self {
        AffineScheme { ideal, dimension: OnceLock::new(), smoothness: OnceLock::new() }
    }

    /// Affine space over `ring`.
    pub fn affine_space(ring: &PolynomialRing) -> Self {
        Self::new_unchecked(Ideal::zero(ring))
    }

    pub fn ring(&self) -> &PolynomialRing {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ring().nvars()
    }

    pub fn dimension(&self, budget: &Budget) -> Result<i64> {
        if let Some(d) = self.dimension.get() {
            return Ok(*d);
        }
        let d = idealcalc::dimension(&self.ideal, budget)?;
        Ok(*self.dimension.get_or_init(|| d))
    }

    pub fn smoothness(&self, budget: &Budget) -> Result<SmoothnessVerdict> {
        if let Some(v) = self.smoothness.get() {
            return Ok(v.clone());
        }
        let v = idealcalc::smoothness_check(&self.ideal, budget)?;
        if matches!(v, SmoothnessVerdict::Indeterminate(_)) {
            return Ok(v);
        }
        Ok(self.smoothness.get_or_init(|| v).clone())
    }

    /// Reduced basis of the defining ideal in the ring's order.
    pub fn groebner(&self, budget: &Budget) -> Result<GroebnerBasis> {
        self.ideal.groebner(self.ring().order(), budget)
    }
}

impl fmt::Display for AffineScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{} in A^{} [{}]", self.ideal, self.ambient_dimension(), self.ring().vars().join(","))
    }
}
