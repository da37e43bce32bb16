//! Exact computer algebra for affine threefolds of the form `{fV - gU = 1}`.
//!
//! The crate is layered bottom-up:
//!
//! * [`polyring`]: sparse multivariate polynomials over the rationals, monomial
//!   orders, multivariate division and reduced Gröbner bases.
//! * [`idealcalc`]: ideal membership (with cofactor certificates), radical
//!   membership, equality, elimination, Krull dimension, emptiness and the
//!   Jacobian smoothness test.
//! * [`bundles`]: affine schemes, two-generator centers supported at a point,
//!   total spaces `I_S + (fV - gU - 1)`, the additive group action, changes of
//!   resolution, pair-isomorphism certificates and Brieskorn surfaces.
//! * [`families`]: the diagonal family over the affine plane, its
//!   trivialization onto `A^2 x SL_2` and its fibers.
//!
//! Everything is exact: no floating point appears anywhere in a verdict.
//!
//! ```
//! use sphere_forge::idealcalc::{radical_membership, Ideal};
//! use sphere_forge::polyring::{Budget, MonomialOrder, PolynomialRing};
//!
//! let r = PolynomialRing::grevlex(&["x", "y"]);
//! let i = Ideal::parse(&r, &["x^2 - y", "x*y - 1"])?;
//! let gb = i.groebner(&MonomialOrder::Grevlex, &Budget::default())?;
//! assert!(gb.contains(&r.parse("y^3 - 1")?)?);
//! assert!(!radical_membership(&r.parse("x - 1")?, &i, &Budget::default())?);
//! # Ok::<(), sphere_forge::Error>(())
//! ```

pub mod bundles;
mod error;
pub mod families;
pub mod idealcalc;
pub mod polyring;

pub use error::{BudgetExhausted, BudgetKind, Error, Result};
pub use polyring::{
    Budget, GroebnerBasis, Monomial, MonomialOrder, Polynomial, PolynomialRing, Rational,
};
