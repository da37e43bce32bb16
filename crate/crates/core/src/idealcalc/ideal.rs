use std::fmt;

use crate::polyring::{reduced_groebner_basis, Budget, GroebnerBasis, MonomialOrder, Polynomial, PolynomialRing};
use crate::{Error, Result};

/// Finitely generated ideal. The zero ideal has no generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: PolynomialRing,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; every generator must live in `ring`.
    pub fn new(ring: &PolynomialRing, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::contract(format!("generator {g} lives in {}, not {ring}", g.ring())));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), generators: gens })
    }

    /// Parses each string as a generator.
    pub fn parse(ring: &PolynomialRing, gens: &[&str]) -> Result<Self> {
        Self::new(ring, gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?)
    }

    pub fn zero(ring: &PolynomialRing) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new() }
    }

    pub fn unit(ring: &PolynomialRing) -> Self {
        Ideal { ring: ring.clone(), generators: vec![ring.one()] }
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// `self + (extra)`.
    pub fn with(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        Self::new(&self.ring, self.generators.iter().cloned().chain(extra))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::contract(format!("ideals over {} and {}", self.ring, other.ring)));
        }
        self.with(other.generators.iter().cloned())
    }

    /// Same generators moved into `ring` (matched by variable name).
    pub fn to_ring(&self, ring: &PolynomialRing) -> Result<Self> {
        Self::new(ring, self.generators.iter().map(|g| g.to_ring(ring)).collect::<Result<Vec<_>>>()?)
    }

    /// Generators for the Gröbner engine; the zero ideal is presented by `0`.
    pub(crate) fn engine_generators(&self) -> Vec<Polynomial> {
        if self.generators.is_empty() {
            vec![self.ring.zero()]
        } else {
            self.generators.clone()
        }
    }

    pub fn groebner(&self, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
        reduced_groebner_basis(&self.engine_generators(), order, budget)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// `target = Σ cofactors[i]·generators[i]`, checkable by direct expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub target: Polynomial,
    pub generators: Vec<Polynomial>,
    pub cofactors: Vec<Polynomial>,
}

impl MembershipCertificate {
    /// Expands the combination and compares it with the target.
    pub fn verify(&self) -> bool {
        if self.cofactors.len() != self.generators.len() {
            return false;
        }
        let mut sum = self.target.ring().zero();
        for (c, g) in self.cofactors.iter().zip(&self.generators) {
            match c.checked_mul(g).and_then(|t| sum.checked_add(&t)) {
                Ok(s) => sum = s,
                Err(_) => return false,
            }
        }
        sum == self.target
    }
}
