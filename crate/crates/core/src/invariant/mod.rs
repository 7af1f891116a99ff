//! Symbolic invariants under connected sum, cabling, mirror and reversal.

pub mod expr;
pub mod lambda;
pub mod summary;

pub use expr::{equivalent, expr_of, CanonicalForm, Equivalence, InvariantExpr, Verdict};
pub use lambda::{Lambda, FIGURE_EIGHT_SYMBOL};
pub use summary::{summary_of, InvariantSummary};
