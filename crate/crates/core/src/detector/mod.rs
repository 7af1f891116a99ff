//! Knot detection from invariant summaries.

pub mod audit;
pub mod ladder;

pub use audit::{family_audit, AuditReport, AuditRow};
pub use ladder::{detect, is_iterated_torus, Detection, DetectionResult, IteratedTorusCertificate};
