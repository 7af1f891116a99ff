//! L²-Alexander invariants of knots: Fox calculus over group rings,
//! Fuglede–Kadison determinant estimates, symbolic invariants of composite
//! knots and the detection procedures built on them.

pub mod detector;
pub mod error;
pub mod fox;
pub mod group;
pub mod invariant;
pub mod knot;
pub mod vna;

pub use detector::{detect, family_audit, DetectionResult};
pub use error::{Error, Result};
pub use group::{GroupPresentation, GroupRingElement, NormalFormOracle, RingMatrix, Word};
pub use invariant::{expr_of, summary_of, InvariantExpr, InvariantSummary};
pub use knot::{catalog, KnotPresentation, KnotSpec};
pub use vna::{delta_at, fk_det, DeltaResult, DetParams, Route};
