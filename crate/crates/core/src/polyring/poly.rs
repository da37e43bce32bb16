use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, PolynomialRing, Rational};
use crate::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in strictly descending monomial order (the ring's order)
/// and no stored coefficient is zero, so structural equality is equality
/// of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolynomialRing,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &PolynomialRing) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &PolynomialRing) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &PolynomialRing, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn var(ring: &PolynomialRing, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), index), Rational::one())],
        }
    }

    pub fn monomial(ring: &PolynomialRing, mono: Monomial, c: Rational) -> Self {
        assert_eq!(mono.len(), ring.nvars(), "monomial length must match the ring");
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(mono, c)] }
    }

    /// Collects arbitrary terms: merges repeated monomials, drops zeros, sorts.
    pub fn from_terms(ring: &PolynomialRing, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "monomial length must match the ring");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(b.0.exponents(), a.0.exponents()));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusts that `terms` is already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &PolynomialRing, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(w[0].0.exponents(), w[1].0.exponents()) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value when the polynomial has degree ≤ 0.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Variables occurring with a positive exponent in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "polynomials from different rings: {} vs {}",
                self.ring, other.ring
            )))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if other.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.mul_term(m, c));
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(other.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Self::from_terms(&self.ring, acc))
    }

    /// Sorted merge of two term lists; `negate` subtracts `other`.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.compare(a[i].0.exponents(), b[j].0.exponents()) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    /// `self * c * mono`; order is preserved because monomial orders are multiplicative.
    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, d)| (m.mul(mono), d * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            Some((Monomial::new(exps), c * Rational::from_integer(e.into())))
        });
        Self::from_terms(&self.ring, terms)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; all images must share one ring.
    pub fn substitute(&self, images: &[Polynomial], target: &PolynomialRing) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::contract(format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|p| p.ring() != target) {
            return Err(Error::contract(format!("substitution image lives in {}, expected {}", bad.ring(), target)));
        }
        // powers[i][k] = images[i]^k, filled lazily
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                term = &term * &pw[e as usize];
            }
            for (mm, cc) in term.terms {
                *acc.entry(mm).or_insert_with(Rational::zero) += cc;
            }
        }
        Ok(Self::from_terms(target, acc))
    }

    /// Evaluates at a rational point, one coordinate per variable.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.nvars() {
            return Err(Error::contract(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    ///
    /// Every variable the polynomial actually uses must exist in `target`;
    /// this covers both reordering the monomial order and ring extension.
    pub fn to_ring(&self, target: &PolynomialRing) -> Result<Polynomial> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        if self.ring.same_variables(target) {
            let mut terms = self.terms.clone();
            let order = target.order();
            terms.sort_by(|a, b| order.compare(b.0.exponents(), a.0.exponents()));
            return Ok(Polynomial { ring: target.clone(), terms });
        }
        let mut map = vec![None; self.ring.nvars()];
        for i in self.variables() {
            let name = &self.ring.vars()[i];
            map[i] = Some(target.index_of(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?);
        }
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; n];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    e[map[i].expect("used variable mapped")] += k;
                }
            }
            (Monomial::new(e), c.clone())
        });
        Ok(Self::from_terms(target, terms))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics if the operands live in different rings; use the
            /// `checked_*` method for a recoverable error.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
                .collect();
            if factors.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::integer;

    fn r2() -> PolynomialRing {
        PolynomialRing::grevlex(&["x", "y"])
    }

    #[test]
    fn add_and_multiply_examples() {
        let r = r2();
        let p = r.parse("x + y").unwrap();
        let q = r.parse("x - y").unwrap();
        assert_eq!(&p + &q, r.parse("2*x").unwrap());
        assert_eq!(&p * &q, r.parse("x^2 - y^2").unwrap());
        assert!((&p * &r.zero()).is_zero());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = PolynomialRing::grevlex(&["x", "y"]).parse("x").unwrap();
        let b = PolynomialRing::grevlex(&["x", "z"]).parse("x").unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::Contract(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::Contract(_))));
    }

    #[test]
    fn display_round_trips() {
        let r = r2();
        for s in ["0", "1", "-3/4", "x^2*y - 1/2*x + 7", "-x - y"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.parse(&p.to_string()).unwrap(), p);
        }
        assert_eq!(r.parse("x*y^2 - 1/2*x").unwrap().to_string(), "x*y^2 - 1/2*x");
    }

    #[test]
    fn substitute_and_evaluate() {
        let r = r2();
        let p = r.parse("x^2 - y").unwrap();
        let swapped = p.substitute(&[r.parse("y").unwrap(), r.parse("x").unwrap()], &r).unwrap();
        assert_eq!(swapped, r.parse("y^2 - x").unwrap());
        assert_eq!(p.evaluate(&[integer(3), integer(4)]).unwrap(), integer(5));
    }

    #[test]
    fn derivative_and_monic() {
        let r = r2();
        let p = r.parse("3*x^2*y + 5*y").unwrap();
        assert_eq!(p.derivative(0), r.parse("6*x*y").unwrap());
        assert_eq!(p.monic(), r.parse("x^2*y + 5/3*y").unwrap());
    }

    #[test]
    fn reorder_keeps_value() {
        let r = r2();
        let lex = r.with_order(MonomialOrder::Lex).unwrap();
        let p = r.parse("y^3 + x").unwrap();
        assert_eq!(p.leading_monomial().unwrap().exponents(), &[0, 3]);
        let q = p.to_ring(&lex).unwrap();
        assert_eq!(q.leading_monomial().unwrap().exponents(), &[1, 0]);
        assert_eq!(q.to_ring(&r).unwrap(), p);
    }
}
