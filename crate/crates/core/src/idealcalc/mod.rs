//! Decision procedures on polynomial ideals, all reduced to Gröbner basis
//! computations: membership, radical membership, equality, elimination,
//! Krull dimension, emptiness of the complex variety, and the Jacobian
//! smoothness test.

mod decide;
mod ideal;
mod smooth;

pub use decide::{
    dimension, eliminate, ideal_equality, ideal_membership, radical_membership, variety_is_empty, Membership,
};
pub use ideal::{Ideal, MembershipCertificate};
pub use smooth::{determinant, jacobian_minors, smoothness_check, Indeterminacy, SmoothnessVerdict};
