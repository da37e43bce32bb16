use crate::idealcalc::{self, Ideal};
use crate::polyring::{Budget, Polynomial, Rational};
use crate::{Error, Result};

use super::total::bundle_equation;
use super::{AffineScheme, CertificateCheck, CompleteIntersectionCenter, IsomorphismCertificate, RegularMap, U_NAME, V_NAME};

/// A 2×2 matrix `[[a, b], [c, d]]` over the base whose determinant reduces
/// to a nonzero constant modulo the base ideal.
///
/// A constant normal form is sufficient for the determinant to be a unit;
/// on surfaces whose only units are constants (such as the affine plane) it
/// is also necessary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionChange {
    a: Polynomial,
    b: Polynomial,
    c: Polynomial,
    d: Polynomial,
    determinant: Rational,
}

impl ResolutionChange {
    pub fn new(base: &AffineScheme, a: Polynomial, b: Polynomial, c: Polynomial, d: Polynomial, budget: &Budget) -> Result<Self> {
        let ring = base.ring();
        if [&a, &b, &c, &d].iter().any(|e| e.ring() != ring) {
            return Err(Error::contract(format!("matrix entries must live in {ring}")));
        }
        let det = &(&a * &d) - &(&b * &c);
        let nf = base.groebner(budget)?.reduce(&det)?;
        match nf.constant_value() {
            Some(k) if !num_traits::Zero::is_zero(&k) => Ok(ResolutionChange { a, b, c, d, determinant: k }),
            _ => Err(Error::NonUnitDeterminant(nf.to_string())),
        }
    }

    pub fn entries(&self) -> [&Polynomial; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Normal form of `ad − bc`.
    pub fn determinant(&self) -> &Rational {
        &self.determinant
    }

    /// `other · self` (apply `self` first, then `other`).
    pub fn then(&self, other: &ResolutionChange, base: &AffineScheme, budget: &Budget) -> Result<ResolutionChange> {
        let [a1, b1, c1, d1] = self.entries();
        let [a2, b2, c2, d2] = other.entries();
        ResolutionChange::new(
            base,
            &(a2 * a1) + &(b2 * c1),
            &(a2 * b1) + &(b2 * d1),
            &(c2 * a1) + &(d2 * c1),
            &(c2 * b1) + &(d2 * d1),
            budget,
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionChangeReport {
    /// `(f', g') = (af + bg, cf + dg)`.
    pub new_center: CompleteIntersectionCenter,
    /// `(s, U, V) ↦ (s, dU − bV, −cU + aV)` on `S × 𝔸²` with its inverse.
    pub automorphism: IsomorphismCertificate,
    pub certificate_check: CertificateCheck,
    /// `f·(−cU + aV) − g·(dU − bV) ≡ f'V − g'U` modulo `I_S`, so the
    /// automorphism carries `{f'V − g'U = 1}` onto `{fV − gU = 1}`.
    pub equation_preserved: bool,
    /// `I_S + (f', g') = I_S + (f, g)`.
    pub centers_equal: bool,
}

impl ResolutionChangeReport {
    pub fn passed(&self) -> bool {
        self.certificate_check.passed() && self.equation_preserved && self.centers_equal
    }
}

pub fn resolution_change(
    center: &CompleteIntersectionCenter,
    change: &ResolutionChange,
    budget: &Budget,
) -> Result<ResolutionChangeReport> {
    let base = center.ambient();
    let ring = base.ring();
    if change.a.ring() != ring {
        return Err(Error::contract("matrix and center live over different bases"));
    }
    let (f, g) = (center.f(), center.g());
    let [a, b, c, d] = change.entries();
    let f2 = &(a * f) + &(b * g);
    let g2 = &(c * f) + &(d * g);

    for name in [U_NAME, V_NAME] {
        if ring.index_of(name).is_some() {
            return Err(Error::contract(format!("base already uses the fiber coordinate `{name}`")));
        }
    }
    let ext = ring.extend([U_NAME, V_NAME])?;
    let lift = |p: &Polynomial| p.to_ring(&ext);
    let product = AffineScheme::new_unchecked(base.ideal().to_ring(&ext)?);
    let (a, b, c, d) = (lift(a)?, lift(b)?, lift(c)?, lift(d)?);
    let u = ext.var(U_NAME)?;
    let v = ext.var(V_NAME)?;
    let n = ring.nvars();
    let mut fwd = ext.gens();
    fwd[n] = &(&d * &u) - &(&b * &v);
    fwd[n + 1] = &(&a * &v) - &(&c * &u);
    let inv_det = change.determinant.recip();
    let mut inv = ext.gens();
    inv[n] = (&(&a * &u) + &(&b * &v)).scale(&inv_det);
    inv[n + 1] = (&(&c * &u) + &(&d * &v)).scale(&inv_det);
    let forward = RegularMap::new(&product, &product, fwd)?;
    let inverse = RegularMap::new(&product, &product, inv)?;
    let automorphism = IsomorphismCertificate::new(forward, inverse)?;
    let certificate_check = automorphism.verify(budget)?;

    let old_eq = bundle_equation(&lift(f)?, &lift(g)?)?;
    let new_eq = bundle_equation(&lift(&f2)?, &lift(&g2)?)?;
    let moved = automorphism.forward().pullback(&old_eq)?;
    let equation_preserved = product.groebner(budget)?.contains(&(&moved - &new_eq))?;

    let old_ideal = center.ideal()?;
    let new_ideal: Ideal = base.ideal().with([f2.clone(), g2.clone()])?;
    let centers_equal = idealcalc::ideal_equality(&old_ideal, &new_ideal, budget)?;

    let new_center = center.with_equations(f2, g2, center.is_verified() && centers_equal);
    Ok(ResolutionChangeReport { new_center, automorphism, certificate_check, equation_preserved, centers_equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{integer, PolynomialRing};

    fn setup() -> (PolynomialRing, AffineScheme, CompleteIntersectionCenter) {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let s = AffineScheme::affine_space(&r);
        let c = CompleteIntersectionCenter::new(&s, r.parse("x").unwrap(), r.parse("y").unwrap(), vec![integer(0); 2]).unwrap();
        (r, s, c)
    }

    fn matrix(r: &PolynomialRing, s: &AffineScheme, e: [&str; 4]) -> Result<ResolutionChange> {
        let p = |t: &str| r.parse(t).unwrap();
        ResolutionChange::new(s, p(e[0]), p(e[1]), p(e[2]), p(e[3]), &Budget::default())
    }

    #[test]
    fn identity_swap_and_shear() {
        let (r, s, c) = setup();
        let b = Budget::default();
        let ext = PolynomialRing::grevlex(&["x", "y", "U", "V"]);
        let p = |t: &str| ext.parse(t).unwrap();

        let id = resolution_change(&c, &matrix(&r, &s, ["1", "0", "0", "1"]).unwrap(), &b).unwrap();
        assert!(id.passed());
        assert_eq!(id.automorphism.forward().components(), &ext.gens()[..]);

        let swap = resolution_change(&c, &matrix(&r, &s, ["0", "1", "1", "0"]).unwrap(), &b).unwrap();
        assert!(swap.passed());
        assert_eq!(swap.new_center.f(), &r.parse("y").unwrap());
        assert_eq!(swap.new_center.g(), &r.parse("x").unwrap());
        assert_eq!(&swap.automorphism.forward().components()[2..], &[p("-V"), p("-U")]);

        let shear = resolution_change(&c, &matrix(&r, &s, ["1", "y", "0", "1"]).unwrap(), &b).unwrap();
        assert!(shear.passed());
        assert_eq!(shear.new_center.f(), &r.parse("x + y^2").unwrap());
        assert_eq!(shear.new_center.g(), &r.parse("y").unwrap());
        assert_eq!(&shear.automorphism.forward().components()[2..], &[p("U - y*V"), p("V")]);
    }

    #[test]
    fn non_unit_determinants_are_rejected() {
        let (r, s, _) = setup();
        assert!(matches!(matrix(&r, &s, ["x", "0", "0", "1"]), Err(Error::NonUnitDeterminant(_))));
        assert!(matches!(matrix(&r, &s, ["1", "1", "1", "1"]), Err(Error::NonUnitDeterminant(_))));
    }

    #[test]
    fn determinant_is_taken_modulo_the_base() {
        // on the curve x*y = 1, x is a unit but its normal form is not constant;
        // 1 + (x*y - 1) = x*y reduces to the constant 1
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let s = AffineScheme::new(Ideal::parse(&r, &["x*y - 1"]).unwrap(), &Budget::default()).unwrap();
        let m = matrix(&r, &s, ["x*y", "0", "0", "1"]).unwrap();
        assert_eq!(m.determinant(), &integer(1));
    }
}
