//! Knot descriptions: construction trees, braids, fibered presentations and
//! the catalog.

pub mod braid;
pub mod catalog;
pub mod family;
pub mod fibered;
pub mod spec;

pub use braid::{parse_braid, Braid};
pub use catalog::{catalog, CatalogEntry, KnotPresentation, LeafKind};
pub use family::{build_family, nth_prime};
pub use fibered::{fibered_presentation, FiberedPresentation, MonodromySpec};
pub use spec::KnotSpec;
