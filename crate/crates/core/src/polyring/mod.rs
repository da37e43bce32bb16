//! Sparse multivariate polynomials over ℚ and the Buchberger engine.

mod division;
mod groebner;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use division::{divide, normal_form, Division};
pub use groebner::{reduced_groebner_basis, reduced_groebner_basis_with_cofactors, s_polynomial, Budget, GroebnerBasis};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_error, parse_expr, parse_polynomial, tokenize, Expr, ExprParser, Spanned, Token};
pub use poly::Polynomial;
pub use ring::PolynomialRing;

/// Exact rational coefficient. Always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Builds the integer `n` as a rational.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
