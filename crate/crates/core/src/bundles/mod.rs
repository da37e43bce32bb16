//! Surfaces, two-generator centers, total spaces `{fV − gU = 1}` and the
//! certificates relating them.

mod brieskorn;
mod center;
mod ga;
mod maps;
mod pair;
mod reschange;
mod scheme;
mod total;

pub use brieskorn::{brieskorn, gm_weight_check, BrieskornSurface, CenterWeightCheck, GmWeightReport};
pub use center::{verify_support, CompleteIntersectionCenter, SupportFailure, SupportOutcome};
pub use ga::{verify_ga_action, GaActionReport};
pub use maps::{CertificateCheck, IsomorphismCertificate, RegularMap};
pub use pair::{verify_pair_isomorphism, PairVerdict};
pub use reschange::{resolution_change, ResolutionChange, ResolutionChangeReport};
pub use scheme::AffineScheme;
pub use total::{build_total_space, BundleTotalSpace, U_NAME, V_NAME};
