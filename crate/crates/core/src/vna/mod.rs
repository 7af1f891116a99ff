//! Von Neumann trace, twisting, norm bounds and Fuglede–Kadison
//! determinant estimates.

pub mod arena;
pub mod delta;
pub mod det;
pub mod norm;
pub mod trace;
pub mod twist;

pub use delta::{delta_at, DeltaResult, Route};
pub use det::{fk_det, DetApproxResult, DetParams, DEFAULT_EPSILON_LADDER};
pub use norm::{monomiality_bound, norm_bound, MonomialityCertificate};
pub use trace::vn_trace;
pub use twist::{twist, TwistedMatrix};
