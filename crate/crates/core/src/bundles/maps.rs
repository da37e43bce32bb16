use crate::polyring::{Budget, GroebnerBasis, Polynomial};
use crate::{Error, Result};

use super::AffineScheme;

/// Morphism `source → target` given by one polynomial in the source
/// coordinates per target coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularMap {
    source: AffineScheme,
    target: AffineScheme,
    components: Vec<Polynomial>,
}

impl RegularMap {
    pub fn new(source: &AffineScheme, target: &AffineScheme, components: Vec<Polynomial>) -> Result<Self> {
        if components.len() != target.ring().nvars() {
            return Err(Error::contract(format!(
                "map into A^{} needs {} components, got {}",
                target.ring().nvars(),
                target.ring().nvars(),
                components.len()
            )));
        }
        if let Some(c) = components.iter().find(|c| c.ring() != source.ring()) {
            return Err(Error::contract(format!("component {c} is not in the source ring {}", source.ring())));
        }
        Ok(RegularMap { source: source.clone(), target: target.clone(), components })
    }

    pub fn identity(scheme: &AffineScheme) -> Self {
        RegularMap { source: scheme.clone(), target: scheme.clone(), components: scheme.ring().gens() }
    }

    pub fn source(&self) -> &AffineScheme {
        &self.source
    }

    pub fn target(&self) -> &AffineScheme {
        &self.target
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// `p ∘ self` for `p` in the target ring.
    pub fn pullback(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != self.target.ring() {
            return Err(Error::contract(format!("{p} is not in the target ring {}", self.target.ring())));
        }
        p.substitute(&self.components, self.source.ring())
    }

    /// `other ∘ self`, with `self: A → B` and `other: B → C`.
    pub fn then(&self, other: &RegularMap) -> Result<RegularMap> {
        if other.source != self.target {
            return Err(Error::contract("composition of maps whose middle schemes differ"));
        }
        let components = other.components.iter().map(|c| self.pullback(c)).collect::<Result<Vec<_>>>()?;
        Ok(RegularMap { source: self.source.clone(), target: other.target.clone(), components })
    }

    /// Every target generator pulls back into the source ideal.
    pub fn is_well_defined(&self, budget: &Budget) -> Result<bool> {
        let gb = self.source.groebner(budget)?;
        self.is_well_defined_with(&gb)
    }

    fn is_well_defined_with(&self, source_gb: &GroebnerBasis) -> Result<bool> {
        for g in self.target.ideal().generators() {
            if !source_gb.contains(&self.pullback(g)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Each component minus the matching coordinate lies in the ideal.
    /// Requires `source == target`.
    pub fn is_identity_modulo(&self, gb: &GroebnerBasis) -> Result<bool> {
        if self.source != self.target {
            return Err(Error::contract("identity check on a map between different schemes"));
        }
        for (c, x) in self.components.iter().zip(self.source.ring().gens()) {
            if !gb.contains(&(c - &x))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A pair of mutually inverse morphisms.
#[derive(Clone, Debug, PartialEq)]
pub struct IsomorphismCertificate {
    forward: RegularMap,
    inverse: RegularMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub forward_well_defined: bool,
    pub inverse_well_defined: bool,
    /// `inverse ∘ forward ≡ id` modulo the source ideal.
    pub source_identity: bool,
    /// `forward ∘ inverse ≡ id` modulo the target ideal.
    pub target_identity: bool,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.forward_well_defined && self.inverse_well_defined && self.source_identity && self.target_identity
    }
}

impl IsomorphismCertificate {
    pub fn new(forward: RegularMap, inverse: RegularMap) -> Result<Self> {
        if forward.source != inverse.target || forward.target != inverse.source {
            return Err(Error::contract("inverse must map the forward target back to the forward source"));
        }
        Ok(IsomorphismCertificate { forward, inverse })
    }

    pub fn identity(scheme: &AffineScheme) -> Self {
        let id = RegularMap::identity(scheme);
        IsomorphismCertificate { forward: id.clone(), inverse: id }
    }

    pub fn forward(&self) -> &RegularMap {
        &self.forward
    }

    pub fn inverse(&self) -> &RegularMap {
        &self.inverse
    }

    pub fn source(&self) -> &AffineScheme {
        &self.forward.source
    }

    pub fn target(&self) -> &AffineScheme {
        &self.forward.target
    }

    pub fn verify(&self, budget: &Budget) -> Result<CertificateCheck> {
        let src = self.source().groebner(budget)?;
        let tgt = self.target().groebner(budget)?;
        Ok(CertificateCheck {
            forward_well_defined: self.forward.is_well_defined_with(&src)?,
            inverse_well_defined: self.inverse.is_well_defined_with(&tgt)?,
            source_identity: self.forward.then(&self.inverse)?.is_identity_modulo(&src)?,
            target_identity: self.inverse.then(&self.forward)?.is_identity_modulo(&tgt)?,
        })
    }
}
