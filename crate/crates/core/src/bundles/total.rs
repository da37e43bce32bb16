use crate::polyring::{Polynomial, PolynomialRing};
use crate::{Error, Result};

use super::{AffineScheme, CompleteIntersectionCenter};

pub const U_NAME: &str = "U";
pub const V_NAME: &str = "V";

/// `{fV − gU = 1} ⊂ S × 𝔸²`: the base ideal extended by the fiber
/// coordinates `U, V` plus the bundle equation.
#[derive(Clone, Debug, PartialEq)]
pub struct BundleTotalSpace {
    base: AffineScheme,
    center: CompleteIntersectionCenter,
    total: AffineScheme,
    equation: Polynomial,
}

impl BundleTotalSpace {
    pub fn base(&self) -> &AffineScheme {
        &self.base
    }

    pub fn center(&self) -> &CompleteIntersectionCenter {
        &self.center
    }

    pub fn total(&self) -> &AffineScheme {
        &self.total
    }

    pub fn ring(&self) -> &PolynomialRing {
        self.total.ring()
    }

    /// `fV − gU − 1` in the total ring.
    pub fn equation(&self) -> &Polynomial {
        &self.equation
    }

    /// `f` and `g` moved into the total ring.
    pub fn lifted_center(&self) -> Result<(Polynomial, Polynomial)> {
        Ok((self.center.f().to_ring(self.ring())?, self.center.g().to_ring(self.ring())?))
    }
}

/// `fV − gU − 1` for polynomials already in a ring containing `U` and `V`.
pub(crate) fn bundle_equation(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring();
    let u = ring.var(U_NAME)?;
    let v = ring.var(V_NAME)?;
    Ok(&(&(f * &v) - &(g * &u)) - &ring.one())
}

/// Builds the total space over a verified center. `allow_unverified` lets
/// exploratory callers skip the support check.
pub fn build_total_space(
    base: &AffineScheme,
    center: &CompleteIntersectionCenter,
    allow_unverified: bool,
) -> Result<BundleTotalSpace> {
    if !center.is_verified() && !allow_unverified {
        return Err(Error::UnverifiedCenter(format!("({}, {})", center.f(), center.g())));
    }
    if center.ambient() != base {
        return Err(Error::contract("center is not on the given base"));
    }
    let ring = base.ring();
    for name in [U_NAME, V_NAME] {
        if ring.index_of(name).is_some() {
            return Err(Error::contract(format!("base already uses the fiber coordinate `{name}`")));
        }
    }
    let ext = ring.extend([U_NAME, V_NAME])?;
    let f = center.f().to_ring(&ext)?;
    let g = center.g().to_ring(&ext)?;
    let equation = bundle_equation(&f, &g)?;
    let ideal = base.ideal().to_ring(&ext)?.with([equation.clone()])?;
    let total = AffineScheme::new_unchecked(ideal);
    Ok(BundleTotalSpace { base: base.clone(), center: center.clone(), total, equation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::{verify_support, SupportOutcome};
    use crate::polyring::{integer, Budget};

    fn verified(s: &AffineScheme, f: &str, g: &str) -> CompleteIntersectionCenter {
        let r = s.ring();
        let c = CompleteIntersectionCenter::new(s, r.parse(f).unwrap(), r.parse(g).unwrap(), vec![integer(0); r.nvars()]).unwrap();
        match verify_support(&c, &Budget::default()).unwrap() {
            SupportOutcome::Verified(c) => c,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sl2_from_the_origin() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let s = AffineScheme::affine_space(&r);
        let t = build_total_space(&s, &verified(&s, "x", "y"), false).unwrap();
        assert_eq!(t.ring().vars(), ["x", "y", "U", "V"]);
        assert_eq!(t.total().ideal().generators(), &[t.ring().parse("x*V - y*U - 1").unwrap()]);
    }

    #[test]
    fn unverified_center_is_rejected() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let s = AffineScheme::affine_space(&r);
        let c = CompleteIntersectionCenter::new(&s, r.parse("x").unwrap(), r.parse("y").unwrap(), vec![integer(0); 2]).unwrap();
        assert!(matches!(build_total_space(&s, &c, false), Err(Error::UnverifiedCenter(_))));
        assert!(build_total_space(&s, &c, true).is_ok());
    }

    #[test]
    fn fiber_names_must_be_free() {
        let r = PolynomialRing::grevlex(&["U", "y"]);
        let s = AffineScheme::affine_space(&r);
        let c = CompleteIntersectionCenter::new(&s, r.parse("U").unwrap(), r.parse("y").unwrap(), vec![integer(0); 2]).unwrap();
        assert!(matches!(build_total_space(&s, &c, true), Err(Error::Contract(_))));
    }
}
