use crate::idealcalc::{self, Ideal};
use crate::polyring::{Budget, Polynomial, Rational};
use crate::{BudgetExhausted, Error, Result};

use super::AffineScheme;

/// `Z = V(f, g)` inside a base scheme, with the point it is claimed to be
/// supported at.
#[derive(Clone, Debug, PartialEq)]
pub struct CompleteIntersectionCenter {
    ambient: AffineScheme,
    f: Polynomial,
    g: Polynomial,
    support_point: Vec<Rational>,
    verified: bool,
}

impl CompleteIntersectionCenter {
    /// Unverified center; run [`verify_support`] before building on it.
    pub fn new(ambient: &AffineScheme, f: Polynomial, g: Polynomial, support_point: Vec<Rational>) -> Result<Self> {
        let ring = ambient.ring();
        if f.ring() != ring || g.ring() != ring {
            return Err(Error::contract(format!("center equations must live in {ring}")));
        }
        if support_point.len() != ring.nvars() {
            return Err(Error::contract(format!(
                "support point has {} coordinates, ambient has {} variables",
                support_point.len(),
                ring.nvars()
            )));
        }
        Ok(CompleteIntersectionCenter { ambient: ambient.clone(), f, g, support_point, verified: false })
    }

    pub fn ambient(&self) -> &AffineScheme {
        &self.ambient
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn support_point(&self) -> &[Rational] {
        &self.support_point
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// `I_S + (f, g)`.
    pub fn ideal(&self) -> Result<Ideal> {
        self.ambient.ideal().with([self.f.clone(), self.g.clone()])
    }

    /// Same base, new equations; keeps the verification flag only when the
    /// caller has shown the ideals agree.
    pub(crate) fn with_equations(&self, f: Polynomial, g: Polynomial, verified: bool) -> Self {
        CompleteIntersectionCenter { f, g, verified, ..self.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportFailure {
    /// `1 ∈ I_S + (f, g)`.
    EmptySupport,
    NotZeroDimensional { dimension: i64 },
    /// `x_i − p_i` is not in the radical, so the support is not `{p}`.
    NotSupportedAtPoint { variable: String },
}

#[derive(Clone, Debug, PartialEq)]
pub enum SupportOutcome {
    Verified(CompleteIntersectionCenter),
    Failed(SupportFailure),
    Indeterminate(BudgetExhausted),
}

/// Checks that `V(f, g) ∩ S = {p}` set-theoretically: the center ideal is
/// proper, zero-dimensional, and contains a power of every `x_i − p_i`.
pub fn verify_support(center: &CompleteIntersectionCenter, budget: &Budget) -> Result<SupportOutcome> {
    match run_checks(center, budget) {
        Ok(None) => Ok(SupportOutcome::Verified(CompleteIntersectionCenter { verified: true, ..center.clone() })),
        Ok(Some(f)) => Ok(SupportOutcome::Failed(f)),
        Err(Error::Budget(b)) => Ok(SupportOutcome::Indeterminate(b)),
        Err(e) => Err(e),
    }
}

fn run_checks(center: &CompleteIntersectionCenter, budget: &Budget) -> Result<Option<SupportFailure>> {
    let ideal = center.ideal()?;
    if idealcalc::variety_is_empty(&ideal, budget)? {
        return Ok(Some(SupportFailure::EmptySupport));
    }
    let dimension = idealcalc::dimension(&ideal, budget)?;
    if dimension != 0 {
        return Ok(Some(SupportFailure::NotZeroDimensional { dimension }));
    }
    let ring = ideal.ring();
    for (i, p) in center.support_point.iter().enumerate() {
        let h = &ring.gens()[i] - &Polynomial::constant(ring, p.clone());
        if !idealcalc::radical_membership(&h, &ideal, budget)? {
            return Ok(Some(SupportFailure::NotSupportedAtPoint { variable: ring.vars()[i].clone() }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{integer, PolynomialRing};

    fn plane() -> (PolynomialRing, AffineScheme) {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let s = AffineScheme::affine_space(&r);
        (r, s)
    }

    fn center(f: &str, g: &str, p: (i64, i64)) -> CompleteIntersectionCenter {
        let (r, s) = plane();
        CompleteIntersectionCenter::new(&s, r.parse(f).unwrap(), r.parse(g).unwrap(), vec![integer(p.0), integer(p.1)])
            .unwrap()
    }

    #[test]
    fn origin_is_verified() {
        let out = verify_support(&center("x", "y", (0, 0)), &Budget::default()).unwrap();
        assert!(matches!(out, SupportOutcome::Verified(c) if c.is_verified()));
    }

    #[test]
    fn monomial_centers_are_verified() {
        for m in 1..=3 {
            for n in 1..=3 {
                let c = center(&format!("x^{m}"), &format!("y^{n}"), (0, 0));
                assert!(matches!(verify_support(&c, &Budget::default()).unwrap(), SupportOutcome::Verified(_)));
            }
        }
    }

    #[test]
    fn failures_name_the_check() {
        let b = Budget::default();
        assert_eq!(
            verify_support(&center("x", "x + 1", (0, 0)), &b).unwrap(),
            SupportOutcome::Failed(SupportFailure::EmptySupport)
        );
        assert_eq!(
            verify_support(&center("x", "x^2", (0, 0)), &b).unwrap(),
            SupportOutcome::Failed(SupportFailure::NotZeroDimensional { dimension: 1 })
        );
        assert_eq!(
            verify_support(&center("x", "y - 1", (0, 0)), &b).unwrap(),
            SupportOutcome::Failed(SupportFailure::NotSupportedAtPoint { variable: "y".into() })
        );
    }

    #[test]
    fn wrong_point_arity() {
        let (r, s) = plane();
        assert!(CompleteIntersectionCenter::new(&s, r.parse("x").unwrap(), r.parse("y").unwrap(), vec![integer(0)]).is_err());
    }
}
