use std::cmp::Ordering;

use num_traits::Zero;

use super::groebner::Meter;
use super::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::{Error, Result};

/// Result of multivariate division: `p = Σ quotients[i]·basis[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Full multivariate division of `p` by `basis` under `order`.
///
/// Quotients and remainder are returned in `p`'s ring. No term of the
/// remainder is divisible by a leading monomial of the basis.
pub fn divide(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Division> {
    let (work_ring, p_w, basis_w) = prepare(p, basis, order)?;
    let refs: Vec<&Polynomial> = basis_w.iter().collect();
    let (rem, quots) = reduce(&p_w, &refs, true, None)?;
    let home = p.ring();
    let quotients = quots
        .expect("requested")
        .into_iter()
        .map(|q| Polynomial::from_sorted(&work_ring, q).to_ring(home))
        .collect::<Result<Vec<_>>>()?;
    Ok(Division { quotients, remainder: rem.to_ring(home)? })
}

/// Remainder of `p` on division by `basis` under `order`, in `p`'s ring.
///
/// Unique (independent of reduction choices) when `basis` is a Gröbner basis
/// for `order`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    let (_, p_w, basis_w) = prepare(p, basis, order)?;
    let refs: Vec<&Polynomial> = basis_w.iter().collect();
    let (rem, _) = reduce(&p_w, &refs, false, None)?;
    rem.to_ring(p.ring())
}

fn prepare(
    p: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Result<(super::PolynomialRing, Polynomial, Vec<Polynomial>)> {
    let ring = p.ring().with_order(order.clone())?;
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        if !b.ring().same_variables(p.ring()) {
            return Err(Error::contract(format!("divisor lives in {}, dividend in {}", b.ring(), p.ring())));
        }
        if b.is_zero() {
            return Err(Error::contract("division by the zero polynomial"));
        }
        out.push(b.to_ring(&ring)?);
    }
    Ok((ring.clone(), p.to_ring(&ring)?, out))
}

/// `a - c·m·b` where the leading term of `a` is known to cancel.
/// Both inputs are descending; the result is descending.
pub(crate) fn sub_scaled(
    order: &MonomialOrder,
    a: &[(Monomial, Rational)],
    c: &Rational,
    m: &Monomial,
    b: &[(Monomial, Rational)],
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let shifted = |k: usize| b[k].0.mul(m);
    let mut bj = if j < b.len() { Some(shifted(j)) } else { None };
    while i < a.len() {
        let Some(bm) = bj.as_ref() else { break };
        match order.compare(a[i].0.exponents(), bm.exponents()) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bj.take().unwrap(), -(c * &b[j].1)));
                j += 1;
                bj = (j < b.len()).then(|| shifted(j));
            }
            Ordering::Equal => {
                let v = &a[i].1 - c * &b[j].1;
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                bj = (j < b.len()).then(|| shifted(j));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if let Some(bm) = bj {
        out.push((bm, -(c * &b[j].1)));
        j += 1;
        out.extend(b[j..].iter().map(|(mm, cc)| (mm.mul(m), -(c * cc))));
    }
    out
}

/// Core reduction loop. All inputs share one ring (and thus one order).
///
/// Returns the remainder and, if requested, the raw quotient term lists
/// (each strictly descending).
#[allow(clippy::type_complexity)]
pub(crate) fn reduce(
    p: &Polynomial,
    basis: &[&Polynomial],
    track_quotients: bool,
    mut meter: Option<&mut Meter>,
) -> Result<(Polynomial, Option<Vec<Vec<(Monomial, Rational)>>>)> {
    let ring = p.ring().clone();
    let order = ring.order().clone();
    let mut quotients = track_quotients.then(|| vec![Vec::new(); basis.len()]);
    let mut rest: Vec<(Monomial, Rational)> = p.terms().to_vec();
    let mut remainder: Vec<(Monomial, Rational)> = Vec::new();
    // quick reject: a term whose degree is below every basis leading degree is final
    while let Some((lm, lc)) = rest.first() {
        if let Some(m) = meter.as_deref_mut() {
            m.tick()?;
        }
        let hit = basis.iter().enumerate().find_map(|(k, g)| {
            let glm = g.leading_monomial().expect("nonzero divisor");
            lm.checked_div(glm).map(|q| (k, q))
        });
        match hit {
            Some((k, q)) => {
                let g = basis[k];
                let c = lc / g.leading_coefficient().expect("nonzero divisor");
                if let Some(qs) = quotients.as_mut() {
                    qs[k].push((q.clone(), c.clone()));
                }
                rest = sub_scaled(&order, &rest[1..], &c, &q, &g.terms()[1..]);
            }
            None => {
                remainder.push(rest.remove(0));
            }
        }
    }
    Ok((Polynomial::from_sorted(&ring, remainder), quotients))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PolynomialRing;
    use proptest::prelude::*;

    fn ring() -> PolynomialRing {
        PolynomialRing::grevlex(&["x", "y"])
    }

    #[test]
    fn examples() {
        let r = ring();
        let p = |s: &str| r.parse(s).unwrap();
        let g = MonomialOrder::Grevlex;
        assert!(normal_form(&p("x*y"), &[p("x")], &g).unwrap().is_zero());
        assert_eq!(normal_form(&p("x^2 + y"), &[p("x^2 - y")], &g).unwrap(), p("2*y"));
        assert_eq!(normal_form(&p("1"), &[p("x"), p("y")], &g).unwrap(), p("1"));
    }

    #[test]
    fn zero_divisor_is_a_contract_violation() {
        let r = ring();
        assert!(matches!(normal_form(&r.one(), &[r.zero()], &MonomialOrder::Grevlex), Err(Error::Contract(_))));
    }

    fn small_poly() -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
        proptest::collection::vec((0u32..4, 0u32..4, -3i64..=3), 1..5)
    }

    fn build(r: &PolynomialRing, t: &[(u32, u32, i64)]) -> Polynomial {
        Polynomial::from_terms(r, t.iter().map(|&(a, b, c)| (Monomial::new(vec![a, b]), Rational::from_integer(c.into()))))
    }

    proptest! {
        #[test]
        fn division_identity(p in small_poly(), b1 in small_poly(), b2 in small_poly(), lex in any::<bool>()) {
            let r = ring();
            let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
            let p = build(&r, &p);
            let basis: Vec<Polynomial> = [build(&r, &b1), build(&r, &b2)].into_iter().filter(|b| !b.is_zero()).collect();
            prop_assume!(!basis.is_empty());
            let d = divide(&p, &basis, &order).unwrap();
            let mut recon = d.remainder.clone();
            for (q, b) in d.quotients.iter().zip(&basis) {
                recon = &recon + &(q * b);
            }
            prop_assert_eq!(&recon, &p);
            let lms: Vec<Monomial> = basis.iter().map(|b| b.to_ring(&r.with_order(order.clone()).unwrap()).unwrap().leading_monomial().unwrap().clone()).collect();
            for (m, _) in d.remainder.terms() {
                prop_assert!(lms.iter().all(|l| !l.divides(m)));
            }
            // p - NF(p) reduces to zero
            let diff = &p - &d.remainder;
            let again = divide(&diff, &basis, &order).unwrap();
            prop_assert!(again.remainder.is_zero());
        }
    }
}
