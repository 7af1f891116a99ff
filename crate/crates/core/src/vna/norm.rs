//! Certified operator-norm bounds.

use serde::Serialize;

use super::twist::TwistedMatrix;
use crate::error::Result;
use crate::fox::jacobian;
use crate::group::{Automorphism, RingMatrix};

/// Schur test on entrywise ℓ¹ norms: `sqrt(max row sum · max column sum)`.
/// Each `R_w` has norm at most `‖w‖₁`, so this never underestimates.
pub fn schur_bound(m: &RingMatrix) -> f64 {
    let (r, c) = m.l1_row_col_max();
    (r * c).sqrt()
}

pub fn norm_bound(m: &TwistedMatrix) -> f64 {
    schur_bound(m.entries())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonomialityCertificate {
    /// Upper bound for `min(‖A‖, ‖A⁻¹‖)` over the fiber jacobian.
    pub bound: f64,
    pub jacobian_bound: f64,
    pub inverse_bound: f64,
    pub t: f64,
    /// `t < 1/bound`: the representative is certified constant 1 here.
    pub below: bool,
    /// `t > bound`: the representative is certified to be `t^{2g}` here.
    pub above: bool,
}

/// Bounds the monomiality threshold of a fibered knot from its monodromy.
/// Fiber words have zero abelian image, so the twist leaves the jacobian
/// unchanged and the bound does not depend on `t`.
pub fn monomiality_bound(phi: &Automorphism, t: f64) -> Result<MonomialityCertificate> {
    let j = jacobian(phi)?;
    let a = schur_bound(&j.w);
    let b = schur_bound(&j.winv);
    let bound = a.min(b);
    Ok(MonomialityCertificate {
        bound,
        jacobian_bound: a,
        inverse_bound: b,
        t,
        below: t * bound < 1.0,
        above: t > bound,
    })
}
