//! Fox jacobians of free-group automorphisms.

use super::derivative::derive;
use crate::error::{Error, Result};
use crate::group::{Automorphism, RingMatrix};

/// `w[i][j] = ∂φ(a_j)/∂a_i` and its two-sided inverse under composition,
/// `winv[i][j] = φ(∂φ⁻¹(a_j)/∂a_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonodromyJacobian {
    pub w: RingMatrix,
    pub winv: RingMatrix,
}

pub fn jacobian(phi: &Automorphism) -> Result<MonodromyJacobian> {
    let n = phi.rank();
    let w = RingMatrix::from_fn(n, n, |i, j| derive(phi.image(j as u32), i as u32));
    let winv = RingMatrix::from_fn(n, n, |i, j| {
        derive(&phi.inverse_images()[j], i as u32).map_words(|u| phi.apply(u))
    });
    if !w.compose(&winv).is_identity() || !winv.compose(&w).is_identity() {
        return Err(Error::InvalidAutomorphism("jacobian product is not the identity".into()));
    }
    Ok(MonodromyJacobian { w, winv })
}

/// Jacobian alone, without inverse verification.
pub fn jacobian_matrix(phi: &Automorphism) -> RingMatrix {
    let n = phi.rank();
    RingMatrix::from_fn(n, n, |i, j| derive(phi.image(j as u32), i as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupRingElement, Word};

    fn el(letters: &[i32], c: f64) -> GroupRingElement {
        GroupRingElement::term(Word::from_letters(letters.iter().copied()), c)
    }

    #[test]
    fn identity_automorphism() {
        let j = jacobian(&Automorphism::identity(3)).unwrap();
        assert!(j.w.is_identity());
        assert!(j.winv.is_identity());
    }

    #[test]
    fn transvection() {
        // a ↦ a, b ↦ a b
        let phi = Automorphism::left_transvection(2, 1, 0);
        let j = jacobian(&phi).unwrap();
        let w = RingMatrix::from_rows(vec![
            vec![GroupRingElement::one(), GroupRingElement::one()],
            vec![GroupRingElement::zero(), el(&[1], 1.0)],
        ]);
        let winv = RingMatrix::from_rows(vec![
            vec![GroupRingElement::one(), el(&[-1], -1.0)],
            vec![GroupRingElement::zero(), el(&[-1], 1.0)],
        ]);
        assert_eq!(j.w, w);
        assert_eq!(j.winv, winv);
    }

    #[test]
    fn figure_eight() {
        let phi = Automorphism::new(
            vec![Word::from_letters([1, 2]), Word::from_letters([2, 1, 2])],
            vec![Word::from_letters([1, 1, -2]), Word::from_letters([2, -1])],
        )
        .unwrap();
        let j = jacobian(&phi).unwrap();
        let w = RingMatrix::from_rows(vec![
            vec![GroupRingElement::one(), el(&[2], 1.0)],
            vec![el(&[1], 1.0), &GroupRingElement::one() + &el(&[2, 1], 1.0)],
        ]);
        let winv = RingMatrix::from_rows(vec![
            vec![&GroupRingElement::one() + &el(&[1, 2], 1.0), el(&[2], -1.0)],
            vec![el(&[1], -1.0), GroupRingElement::one()],
        ]);
        assert_eq!(j.w, w);
        assert_eq!(j.winv, winv);
    }
}
