use crate::idealcalc;
use crate::polyring::Budget;
use crate::{BudgetExhausted, Error, Result};

use super::{CertificateCheck, CompleteIntersectionCenter, IsomorphismCertificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairVerdict {
    /// The certificate is an isomorphism of bases carrying `Z` onto `Z'`.
    PairsIsomorphic,
    CertificateInvalid(CertificateCheck),
    /// The bases are isomorphic through the certificate, but the pulled-back
    /// center differs from `Z`. Says nothing about other isomorphisms.
    CenterMismatch,
    Indeterminate(BudgetExhausted),
}

/// Sufficiency check for `(S, Z) ≅ (S', Z')` relative to a supplied
/// certificate `S → S'`: validates the certificate, pulls `(f', g')` back
/// to `(f'', g'')` and compares `I_S + (f'', g'')` with `I_S + (f, g)`.
pub fn verify_pair_isomorphism(
    left: &CompleteIntersectionCenter,
    right: &CompleteIntersectionCenter,
    cert: &IsomorphismCertificate,
    budget: &Budget,
) -> Result<PairVerdict> {
    if cert.source() != left.ambient() || cert.target() != right.ambient() {
        return Err(Error::contract("certificate does not map the left base to the right base"));
    }
    match run(left, right, cert, budget) {
        Err(Error::Budget(b)) => Ok(PairVerdict::Indeterminate(b)),
        other => other,
    }
}

fn run(
    left: &CompleteIntersectionCenter,
    right: &CompleteIntersectionCenter,
    cert: &IsomorphismCertificate,
    budget: &Budget,
) -> Result<PairVerdict> {
    let check = cert.verify(budget)?;
    if !check.passed() {
        return Ok(PairVerdict::CertificateInvalid(check));
    }
    let f2 = cert.forward().pullback(right.f())?;
    let g2 = cert.forward().pullback(right.g())?;
    let pulled = left.ambient().ideal().with([f2, g2])?;
    if idealcalc::ideal_equality(&pulled, &left.ideal()?, budget)? {
        Ok(PairVerdict::PairsIsomorphic)
    } else {
        Ok(PairVerdict::CenterMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::{AffineScheme, RegularMap};
    use crate::polyring::{integer, PolynomialRing};

    fn plane_center(s: &AffineScheme, f: &str, g: &str) -> CompleteIntersectionCenter {
        let r = s.ring();
        CompleteIntersectionCenter::new(s, r.parse(f).unwrap(), r.parse(g).unwrap(), vec![integer(0); 2]).unwrap()
    }

    #[test]
    fn swap_identifies_transposed_monomial_centers() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let s = AffineScheme::affine_space(&r);
        let swap = RegularMap::new(&s, &s, vec![r.parse("y").unwrap(), r.parse("x").unwrap()]).unwrap();
        let cert = IsomorphismCertificate::new(swap.clone(), swap).unwrap();
        let v = verify_pair_isomorphism(&plane_center(&s, "x", "y^2"), &plane_center(&s, "x^2", "y"), &cert, &Budget::default());
        assert_eq!(v.unwrap(), PairVerdict::PairsIsomorphic);
    }

    #[test]
    fn identity_and_mismatch() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let s = AffineScheme::affine_space(&r);
        let id = IsomorphismCertificate::identity(&s);
        let b = Budget::default();
        assert_eq!(
            verify_pair_isomorphism(&plane_center(&s, "x", "y"), &plane_center(&s, "x", "y"), &id, &b).unwrap(),
            PairVerdict::PairsIsomorphic
        );
        assert_eq!(
            verify_pair_isomorphism(&plane_center(&s, "x^2", "y^3"), &plane_center(&s, "x^3", "y^2"), &id, &b).unwrap(),
            PairVerdict::CenterMismatch
        );
    }

    #[test]
    fn broken_certificate() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let s = AffineScheme::affine_space(&r);
        let fwd = RegularMap::new(&s, &s, vec![r.parse("x^2").unwrap(), r.parse("y").unwrap()]).unwrap();
        let inv = RegularMap::identity(&s);
        let cert = IsomorphismCertificate::new(fwd, inv).unwrap();
        let v = verify_pair_isomorphism(&plane_center(&s, "x", "y"), &plane_center(&s, "x", "y"), &cert, &Budget::default()).unwrap();
        assert!(matches!(v, PairVerdict::CertificateInvalid(_)));
    }
}
