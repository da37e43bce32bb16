use crate::polyring::{reduced_groebner_basis_with_cofactors, Budget, MonomialOrder, Polynomial};
use crate::{Error, Result};

use super::{Ideal, MembershipCertificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// Present when requested and `member` holds; always verified.
    pub certificate: Option<MembershipCertificate>,
}

fn same_ring(h: &Polynomial, ideal: &Ideal) -> Result<()> {
    if h.ring() != ideal.ring() {
        return Err(Error::contract(format!("{h} is not in the ring of the ideal {}", ideal.ring())));
    }
    Ok(())
}

/// `h ∈ I`, decided by reduction against the reduced basis of `I` in the
/// ring's order. With `certify`, cofactors are tracked through the
/// completion and re-expanded before being returned.
pub fn ideal_membership(h: &Polynomial, ideal: &Ideal, certify: bool, budget: &Budget) -> Result<Membership> {
    same_ring(h, ideal)?;
    let order = ideal.ring().order();
    if !certify {
        let gb = ideal.groebner(order, budget)?;
        return Ok(Membership { member: gb.contains(h)?, certificate: None });
    }
    if ideal.is_zero_ideal() {
        let member = h.is_zero();
        let certificate = member.then(|| MembershipCertificate {
            target: h.clone(),
            generators: Vec::new(),
            cofactors: Vec::new(),
        });
        return Ok(Membership { member, certificate });
    }
    let gb = reduced_groebner_basis_with_cofactors(ideal.generators(), order, budget)?;
    let Some(cofactors) = gb.lift(h)? else {
        return Ok(Membership { member: false, certificate: None });
    };
    let cert = MembershipCertificate { target: h.clone(), generators: ideal.generators().to_vec(), cofactors };
    if !cert.verify() {
        return Err(Error::contract(format!("membership certificate for {h} failed to expand")));
    }
    Ok(Membership { member: true, certificate: Some(cert) })
}

/// `h ∈ √I` via Rabinowitsch: `1 ∈ I + (1 − t·h)` with `t` a fresh variable.
pub fn radical_membership(h: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    same_ring(h, ideal)?;
    let ring = ideal.ring();
    let t_name = ring.fresh_name("t");
    let ext = ring.extend([t_name.as_str()])?;
    let t = ext.var(&t_name)?;
    let rabinowitsch = &ext.one() - &(&t * &h.to_ring(&ext)?);
    let extended = ideal.to_ring(&ext)?.with([rabinowitsch])?;
    variety_is_empty(&extended, budget)
}

/// Equal reduced bases under the ring's order.
pub fn ideal_equality(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::contract(format!("ideals over {} and {}", a.ring(), b.ring())));
    }
    let order = a.ring().order();
    Ok(a.groebner(order, budget)? == b.groebner(order, budget)?)
}

/// `I ∩ ℚ[remaining variables]`, returned as an ideal of the same ring whose
/// generators avoid every variable in `vars`.
pub fn eliminate(ideal: &Ideal, vars: &[&str], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let idx: Vec<usize> = vars
        .iter()
        .map(|v| ring.index_of(v).ok_or_else(|| Error::UnknownVariable(v.to_string())))
        .collect::<Result<_>>()?;
    if idx.is_empty() {
        return Ok(ideal.clone());
    }
    let order = MonomialOrder::block(ring.nvars(), &idx);
    let gb = ideal.groebner(&order, budget)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|e| e.variables().iter().all(|v| !idx.contains(v)))
        .map(|e| e.to_ring(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)
}

/// Krull dimension of `ring / I`; `-1` for the unit ideal.
///
/// Read off the grevlex leading-term ideal as the largest set of variables
/// containing the support of no leading monomial.
pub fn dimension(ideal: &Ideal, budget: &Budget) -> Result<i64> {
    let n = ideal.ring().nvars();
    if n > 24 {
        return Err(Error::contract("dimension is limited to 24 variables"));
    }
    let gb = ideal.groebner(&MonomialOrder::Grevlex, budget)?;
    if gb.is_unit() {
        return Ok(-1);
    }
    let supports: Vec<u32> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    let best = (0u32..(1u32 << n))
        .filter(|&u| supports.iter().all(|&s| s & !u != 0))
        .map(|u| u.count_ones())
        .max()
        .unwrap_or(0);
    Ok(best as i64)
}

/// `V(I) = ∅` over ℂ, i.e. the reduced basis is `{1}` (weak Nullstellensatz).
pub fn variety_is_empty(ideal: &Ideal, budget: &Budget) -> Result<bool> {
    Ok(ideal.groebner(&MonomialOrder::Grevlex, budget)?.is_unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PolynomialRing;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn membership_examples() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(ideal_membership(&r.parse("y").unwrap(), &i, false, &b()).unwrap().member);
        let x = Ideal::parse(&r, &["x"]).unwrap();
        assert!(!ideal_membership(&r.parse("x + 1").unwrap(), &x, false, &b()).unwrap().member);
        let x2 = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(!ideal_membership(&r.parse("x").unwrap(), &x2, true, &b()).unwrap().member);
    }

    #[test]
    fn certificate_is_returned_and_verified() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 - y", "x*y - 1"]).unwrap();
        let h = r.parse("y^3 - 1").unwrap();
        let m = ideal_membership(&h, &i, true, &b()).unwrap();
        assert!(m.member);
        let cert = m.certificate.unwrap();
        assert!(cert.verify());
        assert_eq!(cert.target, h);
    }

    #[test]
    fn radical_examples() {
        let r = PolynomialRing::grevlex(&["x", "y", "z"]);
        let x2 = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(radical_membership(&r.parse("x").unwrap(), &x2, &b()).unwrap());
        let xy = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(!radical_membership(&r.parse("z").unwrap(), &xy, &b()).unwrap());
        let cube = Ideal::parse(&r, &["(x+y)^3"]).unwrap();
        assert!(radical_membership(&r.parse("x + y").unwrap(), &cube, &b()).unwrap());
    }

    #[test]
    fn radical_membership_avoids_existing_t() {
        let r = PolynomialRing::grevlex(&["t", "x"]);
        let i = Ideal::parse(&r, &["t^2"]).unwrap();
        assert!(radical_membership(&r.parse("t").unwrap(), &i, &b()).unwrap());
        assert!(!radical_membership(&r.parse("x").unwrap(), &i, &b()).unwrap());
    }

    #[test]
    fn equality_examples() {
        let r = PolynomialRing::grevlex(&["x", "y"]);
        let p = |g: &[&str]| Ideal::parse(&r, g).unwrap();
        assert!(ideal_equality(&p(&["x", "y"]), &p(&["y", "x + y"]), &b()).unwrap());
        assert!(!ideal_equality(&p(&["x^2", "y"]), &p(&["x", "y"]), &b()).unwrap());
        for (m, n, m2, n2) in [(1, 2, 1, 2), (2, 3, 3, 2), (2, 2, 2, 3)] {
            let a = p(&[&format!("x^{m}"), &format!("y^{n}")]);
            let c = p(&[&format!("x^{m2}"), &format!("y^{n2}")]);
            assert_eq!(ideal_equality(&a, &c, &b()).unwrap(), (m, n) == (m2, n2));
        }
    }

    #[test]
    fn elimination_examples() {
        let r = PolynomialRing::grevlex(&["t", "x", "y"]);
        let i = Ideal::parse(&r, &["x - t", "y - t^2"]).unwrap();
        let e = eliminate(&i, &["t"], &b()).unwrap();
        assert!(ideal_equality(&e, &Ideal::parse(&r, &["y - x^2"]).unwrap(), &b()).unwrap());
        assert!(ideal_equality(&eliminate(&i, &[], &b()).unwrap(), &i, &b()).unwrap());
        let r2 = PolynomialRing::grevlex(&["x", "y"]);
        let x = Ideal::parse(&r2, &["x"]).unwrap();
        assert!(eliminate(&x, &["x"], &b()).unwrap().is_zero_ideal());
        assert!(matches!(eliminate(&x, &["w"], &b()), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn dimension_examples() {
        let r2 = PolynomialRing::grevlex(&["x", "y"]);
        assert_eq!(dimension(&Ideal::parse(&r2, &["x", "y"]).unwrap(), &b()).unwrap(), 0);
        let r3 = PolynomialRing::grevlex(&["x", "y", "z"]);
        assert_eq!(dimension(&Ideal::parse(&r3, &["x^2 + y^3 + z^7"]).unwrap(), &b()).unwrap(), 2);
        let r1 = PolynomialRing::grevlex(&["x"]);
        assert_eq!(dimension(&Ideal::parse(&r1, &["x", "x - 1"]).unwrap(), &b()).unwrap(), -1);
        assert_eq!(dimension(&Ideal::zero(&r3), &b()).unwrap(), 3);
    }

    #[test]
    fn emptiness_examples() {
        let r1 = PolynomialRing::grevlex(&["x"]);
        assert!(variety_is_empty(&Ideal::parse(&r1, &["x", "x - 1"]).unwrap(), &b()).unwrap());
        assert!(!variety_is_empty(&Ideal::parse(&r1, &["x"]).unwrap(), &b()).unwrap());
        let r4 = PolynomialRing::grevlex(&["x", "y", "U", "V"]);
        let i = Ideal::parse(&r4, &["x*V - y*U - 1", "x", "y"]).unwrap();
        assert!(variety_is_empty(&i, &b()).unwrap());
    }

    #[test]
    fn ring_mismatch() {
        let r = PolynomialRing::grevlex(&["x"]);
        let s = PolynomialRing::grevlex(&["y"]);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert!(matches!(ideal_membership(&s.parse("y").unwrap(), &i, false, &b()), Err(Error::Contract(_))));
    }
}
