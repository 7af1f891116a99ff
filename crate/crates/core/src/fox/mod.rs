//! Fox derivatives, Fox matrices, the abelianization and Fox jacobians.

pub mod abelian;
pub mod derivative;
pub mod jacobian;
pub mod laurent;
pub mod matrix;

pub use abelian::{abelianization, AbelianizationMap};
pub use derivative::{fox_derivative, fox_derivative_element};
pub use jacobian::{jacobian, jacobian_matrix, MonodromyJacobian};
pub use laurent::{classical_alexander, LaurentPoly};
pub use matrix::{fox_matrix, FoxMatrix};
