//! The diagonal family over `𝔸²`: the hypersurface
//! `W = {(x₂ − x₁)V − (y₂ − y₁)U = 1} ⊂ 𝔸⁶`, its trivialization onto
//! `𝔸² × SL₂`, and its fibers over points of the first factor.

use crate::bundles::{
    build_total_space, verify_support, AffineScheme, BundleTotalSpace, CompleteIntersectionCenter, RegularMap,
    SupportOutcome,
};
use crate::idealcalc::{ideal_equality, Ideal, SmoothnessVerdict};
use crate::polyring::{integer, Budget, Polynomial, PolynomialRing, Rational};
use crate::{Error, Result};

pub const FAMILY_VARIABLES: [&str; 6] = ["x1", "y1", "x2", "y2", "U", "V"];
pub const TRIVIAL_VARIABLES: [&str; 6] = ["s1", "s2", "a", "b", "U", "V"];
pub const FIBER_VARIABLES: [&str; 4] = ["x2", "y2", "U", "V"];

#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalFamily {
    total: AffineScheme,
    dimension: i64,
    smoothness: SmoothnessVerdict,
}

impl DiagonalFamily {
    pub fn total(&self) -> &AffineScheme {
        &self.total
    }

    pub fn ring(&self) -> &PolynomialRing {
        self.total.ring()
    }

    pub fn generator(&self) -> &Polynomial {
        &self.total.ideal().generators()[0]
    }

    /// Coordinates of the base projection `W → 𝔸²`.
    pub fn base_projection(&self) -> [&'static str; 2] {
        ["x1", "y1"]
    }

    pub fn dimension(&self) -> i64 {
        self.dimension
    }

    pub fn smoothness(&self) -> &SmoothnessVerdict {
        &self.smoothness
    }
}

pub fn build_diagonal_family(budget: &Budget) -> Result<DiagonalFamily> {
    let ring = PolynomialRing::grevlex(&FAMILY_VARIABLES);
    let generator = ring.parse("(x2 - x1)*V - (y2 - y1)*U - 1")?;
    let total = AffineScheme::new(Ideal::new(&ring, [generator])?, budget)?;
    let dimension = total.dimension(budget)?;
    let smoothness = total.smoothness(budget)?;
    Ok(DiagonalFamily { total, dimension, smoothness })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrivializationReport {
    /// `W → 𝔸² × SL₂`.
    pub phi: RegularMap,
    pub psi: RegularMap,
    /// Pullback of `aV − bU − 1` along Φ equals the family generator.
    pub pullback_matches: bool,
    /// `Ψ∘Φ = id` coordinate-wise as polynomials.
    pub psi_after_phi: bool,
    pub phi_after_psi: bool,
    /// `pr₁ ∘ Φ = (x₁, y₁)` and `(x₁, y₁) ∘ Ψ = pr₁`.
    pub base_commutes: bool,
    pub sample_point: Vec<Rational>,
    pub sample_image: Vec<Rational>,
    pub sample_on_target: bool,
}

impl TrivializationReport {
    pub fn passed(&self) -> bool {
        self.pullback_matches && self.psi_after_phi && self.phi_after_psi && self.base_commutes && self.sample_on_target
    }
}

fn exact_identity(map: &RegularMap) -> bool {
    map.components() == map.source().ring().gens().as_slice()
}

/// All checks are exact polynomial identities; no Gröbner basis is needed.
pub fn verify_trivialization(family: &DiagonalFamily) -> Result<TrivializationReport> {
    let w = family.total();
    let wr = w.ring();
    let tr = PolynomialRing::grevlex(&TRIVIAL_VARIABLES);
    let target_eq = tr.parse("a*V - b*U - 1")?;
    let target = AffineScheme::new_unchecked(Ideal::new(&tr, [target_eq.clone()])?);

    let parse_all = |r: &PolynomialRing, texts: &[&str]| texts.iter().map(|t| r.parse(t)).collect::<Result<Vec<_>>>();
    let phi = RegularMap::new(w, &target, parse_all(wr, &["x1", "y1", "x2 - x1", "y2 - y1", "U", "V"])?)?;
    let psi = RegularMap::new(&target, w, parse_all(&tr, &["s1", "s2", "a + s1", "b + s2", "U", "V"])?)?;

    let pullback_matches = phi.pullback(&target_eq)? == *family.generator();
    let psi_after_phi = exact_identity(&phi.then(&psi)?);
    let phi_after_psi = exact_identity(&psi.then(&phi)?);
    let base_commutes = phi.components()[..2] == wr.gens()[..2] && psi.components()[..2] == tr.gens()[..2];

    let sample_point: Vec<Rational> = [0, 0, 1, 0, 0, 1].into_iter().map(integer).collect();
    let sample_image = phi.components().iter().map(|c| c.evaluate(&sample_point)).collect::<Result<Vec<_>>>()?;
    let on_source = family.generator().evaluate(&sample_point)? == integer(0);
    let sample_on_target = on_source && target_eq.evaluate(&sample_image)? == integer(0);

    Ok(TrivializationReport {
        phi,
        psi,
        pullback_matches,
        psi_after_phi,
        phi_after_psi,
        base_commutes,
        sample_point,
        sample_image,
        sample_on_target,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberRestriction {
    pub point: (Rational, Rational),
    /// Family ideal with `x₁ ↦ p₁, y₁ ↦ p₂`, in `ℚ[x₂, y₂, U, V]`.
    pub fiber: AffineScheme,
    /// Total space over `𝔸²[x, y]` with center `(x − p₁, y − p₂)`.
    pub direct: BundleTotalSpace,
    /// Renaming applied to `direct` before comparing, as `(from, to)`.
    pub renaming: Vec<(String, String)>,
    pub direct_renamed: Ideal,
    pub equal: bool,
    /// Φ frozen at `p` pulls `x₂V − y₂U − 1` back to the fiber equation, and
    /// the translation `x₂ ↦ x₂ + p₁, y₂ ↦ y₂ + p₂` carries the fiber onto `SL₂`.
    pub translation_consistent: bool,
}

impl FiberRestriction {
    pub fn passed(&self) -> bool {
        self.equal && self.translation_consistent
    }
}

pub fn restrict_fiber(family: &DiagonalFamily, point: (Rational, Rational), budget: &Budget) -> Result<FiberRestriction> {
    let (p1, p2) = point.clone();
    let fr = PolynomialRing::grevlex(&FIBER_VARIABLES);
    let c1 = Polynomial::constant(&fr, p1.clone());
    let c2 = Polynomial::constant(&fr, p2.clone());
    let mut images = vec![c1.clone(), c2.clone()];
    images.extend(fr.gens());
    let fiber_eq = family.generator().substitute(&images, &fr)?;
    let fiber = AffineScheme::new_unchecked(Ideal::new(&fr, [fiber_eq.clone()])?);

    let plane = PolynomialRing::grevlex(&["x", "y"]);
    let base = AffineScheme::affine_space(&plane);
    let f = &plane.var("x")? - &Polynomial::constant(&plane, p1.clone());
    let g = &plane.var("y")? - &Polynomial::constant(&plane, p2.clone());
    let center = CompleteIntersectionCenter::new(&base, f, g, vec![p1.clone(), p2.clone()])?;
    let center = match verify_support(&center, budget)? {
        SupportOutcome::Verified(c) => c,
        SupportOutcome::Indeterminate(b) => return Err(Error::Budget(b)),
        SupportOutcome::Failed(why) => return Err(Error::contract(format!("point center failed its support check: {why:?}"))),
    };
    let direct = build_total_space(&base, &center, false)?;

    let renaming: Vec<(String, String)> = direct
        .ring()
        .vars()
        .iter()
        .zip(FIBER_VARIABLES)
        .map(|(a, b)| (a.clone(), b.to_string()))
        .collect();
    let rename = fr.gens();
    let direct_renamed = Ideal::new(
        &fr,
        direct
            .total()
            .ideal()
            .generators()
            .iter()
            .map(|p| p.substitute(&rename, &fr))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let equal = ideal_equality(fiber.ideal(), &direct_renamed, budget)?;

    let sl2_eq = fr.parse("x2*V - y2*U - 1")?;
    let u = fr.var("U")?;
    let v = fr.var("V")?;
    let x2 = fr.var("x2")?;
    let y2 = fr.var("y2")?;
    let frozen_phi = [&x2 - &c1, &y2 - &c2, u.clone(), v.clone()];
    let phi_ok = sl2_eq.substitute(&frozen_phi, &fr)? == fiber_eq;
    let translate = [&x2 + &c1, &y2 + &c2, u, v];
    let translated = Ideal::new(&fr, [fiber_eq.substitute(&translate, &fr)?])?;
    let sl2 = Ideal::new(&fr, [sl2_eq])?;
    let translation_consistent = phi_ok && ideal_equality(&translated, &sl2, budget)?;

    Ok(FiberRestriction { point, fiber, direct, renaming, direct_renamed, equal, translation_consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;

    #[test]
    fn family_is_a_smooth_fivefold() {
        let fam = build_diagonal_family(&Budget::default()).unwrap();
        assert_eq!(fam.total().ideal().generators().len(), 1);
        assert_eq!(fam.generator().total_degree(), Some(2));
        assert_eq!(fam.dimension(), 5);
        assert!(fam.smoothness().is_smooth());
    }

    #[test]
    fn trivialization_is_exact() {
        let fam = build_diagonal_family(&Budget::default()).unwrap();
        let rep = verify_trivialization(&fam).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let expect: Vec<Rational> = [0, 0, 1, 0, 0, 1].into_iter().map(integer).collect();
        assert_eq!(rep.sample_image, expect);
    }

    #[test]
    fn fibers_match_direct_construction() {
        let fam = build_diagonal_family(&Budget::default()).unwrap();
        for p in [(integer(0), integer(0)), (integer(1), integer(2)), (rational(-3, 7), rational(5, 2))] {
            let r = restrict_fiber(&fam, p, &Budget::default()).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let r = restrict_fiber(&fam, (integer(1), integer(2)), &Budget::default()).unwrap();
        let fr = r.fiber.ring().clone();
        assert_eq!(r.fiber.ideal().generators()[0], fr.parse("(x2 - 1)*V - (y2 - 2)*U - 1").unwrap());
        assert_eq!(r.renaming[0], ("x".to_string(), "x2".to_string()));
    }
}
