use num_integer::Integer;
use num_traits::One;

use crate::idealcalc::Ideal;
use crate::polyring::{rational, Monomial, Polynomial, PolynomialRing, Rational};
use crate::{Error, Result};

use super::AffineScheme;

/// `S_{p,q,r} = {x^p + y^q + z^r = 0} ⊂ 𝔸³`, singular only at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct BrieskornSurface {
    pub exponents: (u32, u32, u32),
    pub scheme: AffineScheme,
    pub singular_point: Vec<Rational>,
}

impl BrieskornSurface {
    pub fn equation(&self) -> &Polynomial {
        &self.scheme.ideal().generators()[0]
    }
}

/// Validates `p, q, r ≥ 2`, pairwise coprime, with `1/p + 1/q + 1/r < 1`.
pub fn brieskorn(p: u32, q: u32, r: u32) -> Result<BrieskornSurface> {
    for (name, v) in [("p", p), ("q", q), ("r", r)] {
        if v < 2 {
            return Err(Error::InvalidBrieskorn(format!("{name} = {v} < 2")));
        }
    }
    for (a, b) in [(p, q), (p, r), (q, r)] {
        let g = a.gcd(&b);
        if g != 1 {
            return Err(Error::InvalidBrieskorn(format!("gcd({a},{b}) = {g}")));
        }
    }
    let sum = rational(1, p.into()) + rational(1, q.into()) + rational(1, r.into());
    if sum >= Rational::one() {
        return Err(Error::InvalidBrieskorn(format!(
            "1/{p} + 1/{q} + 1/{r} = {}/{} >= 1",
            sum.numer(),
            sum.denom()
        )));
    }
    let ring = PolynomialRing::grevlex(&["x", "y", "z"]);
    let eq = Polynomial::from_terms(
        &ring,
        [
            (Monomial::new(vec![p, 0, 0]), Rational::one()),
            (Monomial::new(vec![0, q, 0]), Rational::one()),
            (Monomial::new(vec![0, 0, r]), Rational::one()),
        ],
    );
    let scheme = AffineScheme::new_unchecked(Ideal::new(&ring, [eq])?);
    Ok(BrieskornSurface { exponents: (p, q, r), scheme, singular_point: vec![Rational::from_integer(0.into()); 3] })
}

/// Image of `(x^m, y^n)` under the weighted scaling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterWeightCheck {
    pub m: u32,
    pub n: u32,
    /// Each image generator is `λ^k` times the original.
    pub preserved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmWeightReport {
    /// `(qr, pr, pq)`.
    pub weights: (u64, u64, u64),
    pub degree: u64,
    /// `F(λ^{qr}x, λ^{pr}y, λ^{pq}z) = λ^{pqr}·F` exactly.
    pub identity_holds: bool,
    /// At `λ = 1` the substitution returns `F` unchanged.
    pub unit_specialization_is_identity: bool,
    pub centers: Vec<CenterWeightCheck>,
    /// Whether weight `qr` on `z` (instead of `pq`) would also give a
    /// homogeneous identity; false for every admissible triple since
    /// `p·q·r` would need `qr·r = pqr`, i.e. `r = p`.
    pub z_weight_qr_works: bool,
}

impl GmWeightReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.unit_specialization_is_identity && self.centers.iter().all(|c| c.preserved)
    }
}

fn scale_substitute(f: &Polynomial, ext: &PolynomialRing, lambda: &Polynomial, weights: [u64; 3]) -> Result<Polynomial> {
    let images: Vec<Polynomial> = (0..3)
        .map(|i| Ok(&lambda.pow(weights[i] as u32) * &Polynomial::var(ext, i)))
        .collect::<Result<_>>()?;
    f.substitute(&images, ext)
}

/// Verifies the 𝔾ₘ-action `λ·(x, y, z) = (λ^{qr}x, λ^{pr}y, λ^{pq}z)` on
/// `S_{p,q,r}` and that it preserves each ideal `(x^m, y^n)` in `centers`.
pub fn gm_weight_check(p: u32, q: u32, r: u32, centers: &[(u32, u32)]) -> Result<GmWeightReport> {
    let surface = brieskorn(p, q, r)?;
    let (p64, q64, r64) = (p as u64, q as u64, r as u64);
    let weights = [q64 * r64, p64 * r64, p64 * q64];
    let degree = p64 * q64 * r64;
    if degree > u32::MAX as u64 {
        return Err(Error::InvalidBrieskorn(format!("weight degree {degree} is too large")));
    }
    let ring = surface.scheme.ring().clone();
    let lname = ring.fresh_name("lambda");
    let ext = ring.extend([lname.as_str()])?;
    let lambda = ext.var(&lname)?;
    let f = surface.equation().clone();
    let f_ext = f.to_ring(&ext)?;

    let image = scale_substitute(&f, &ext, &lambda, weights)?;
    let identity_holds = image == &lambda.pow(degree as u32) * &f_ext;

    let one = ext.one();
    let mut at_one: Vec<Polynomial> = ext.gens();
    let li = ext.index_of(&lname).unwrap();
    at_one[li] = one;
    let unit_specialization_is_identity = image.substitute(&at_one, &ext)? == f_ext;

    let printed = scale_substitute(&f, &ext, &lambda, [weights[0], weights[1], q64 * r64])?;
    let z_weight_qr_works = printed.len() == 3
        && printed.terms().iter().map(|(m, _)| m.exponents()[li]).all(|k| k == printed.terms()[0].0.exponents()[li]);

    let centers = centers
        .iter()
        .map(|&(m, n)| -> Result<CenterWeightCheck> {
            let gens = [ring.parse(&format!("x^{m}"))?, ring.parse(&format!("y^{n}"))?];
            let mut preserved = true;
            for g in gens {
                let img = scale_substitute(&g, &ext, &lambda, weights)?;
                let g_ext = g.to_ring(&ext)?;
                // img must be λ^k · g for a single k
                let ok = img.len() == 1
                    && g_ext.len() == 1
                    && img.terms()[0].1 == g_ext.terms()[0].1
                    && {
                        let (mi, mg) = (img.terms()[0].0.exponents(), g_ext.terms()[0].0.exponents());
                        (0..ext.nvars()).all(|i| i == li || mi[i] == mg[i])
                    };
                preserved &= ok;
            }
            Ok(CenterWeightCheck { m, n, preserved })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(GmWeightReport {
        weights: (weights[0], weights[1], weights[2]),
        degree,
        identity_holds,
        unit_specialization_is_identity,
        centers,
        z_weight_qr_works,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_triples() {
        assert!(brieskorn(2, 3, 7).is_ok());
        assert_eq!(brieskorn(2, 4, 5).unwrap_err(), Error::InvalidBrieskorn("gcd(2,4) = 2".into()));
        assert_eq!(brieskorn(2, 3, 5).unwrap_err(), Error::InvalidBrieskorn("1/2 + 1/3 + 1/5 = 31/30 >= 1".into()));
        assert!(matches!(brieskorn(1, 3, 7), Err(Error::InvalidBrieskorn(_))));
    }

    #[test]
    fn weights_for_2_3_7() {
        let rep = gm_weight_check(2, 3, 7, &[(1, 1), (2, 3)]).unwrap();
        assert_eq!(rep.weights, (21, 14, 6));
        assert_eq!(rep.degree, 42);
        assert!(rep.passed());
        assert!(!rep.z_weight_qr_works);
    }
}
