//! Automorphisms of a free group of finite rank, always carried together
//! with their inverse.

use super::word::Word;
use crate::error::{Error, Result};

/// An automorphism given by the images of the generators, paired with the
/// images under its inverse. Construction checks both composites fix every
/// generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl Automorphism {
    pub fn new(images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self> {
        let rank = images.len();
        if inverse_images.len() != rank {
            return Err(Error::InvalidAutomorphism(format!(
                "{rank} images but {} inverse images",
                inverse_images.len()
            )));
        }
        for w in images.iter().chain(&inverse_images) {
            if let Some(g) = w.max_generator() {
                if g as usize >= rank {
                    return Err(Error::Alphabet { index: g, size: rank });
                }
            }
        }
        let phi = Automorphism { images, inverse_images };
        for i in 0..rank as u32 {
            let a = Word::generator(i);
            if phi.apply(&phi.apply_inverse(&a)) != a || phi.apply_inverse(&phi.apply(&a)) != a {
                return Err(Error::InvalidAutomorphism(format!(
                    "composite with the supplied inverse moves generator {i}"
                )));
            }
        }
        Ok(phi)
    }

    pub fn identity(rank: usize) -> Self {
        let ids: Vec<Word> = (0..rank as u32).map(Word::generator).collect();
        Automorphism { images: ids.clone(), inverse_images: ids }
    }

    /// `a_i ↦ a_i a_j` (i ≠ j).
    pub fn right_transvection(rank: usize, i: u32, j: u32) -> Self {
        assert!(i != j && (i as usize) < rank && (j as usize) < rank);
        let mut phi = Self::identity(rank);
        phi.images[i as usize] = Word::reduce([(i, 1), (j, 1)]);
        phi.inverse_images[i as usize] = Word::reduce([(i, 1), (j, -1)]);
        phi
    }

    /// `a_i ↦ a_j a_i` (i ≠ j).
    pub fn left_transvection(rank: usize, i: u32, j: u32) -> Self {
        assert!(i != j && (i as usize) < rank && (j as usize) < rank);
        let mut phi = Self::identity(rank);
        phi.images[i as usize] = Word::reduce([(j, 1), (i, 1)]);
        phi.inverse_images[i as usize] = Word::reduce([(j, -1), (i, 1)]);
        phi
    }

    /// `a_i ↦ a_i⁻¹`.
    pub fn inversion(rank: usize, i: u32) -> Self {
        let mut phi = Self::identity(rank);
        phi.images[i as usize] = Word::power(i, -1);
        phi.inverse_images[i as usize] = Word::power(i, -1);
        phi
    }

    /// Swaps `a_i` and `a_j`.
    pub fn swap(rank: usize, i: u32, j: u32) -> Self {
        let mut phi = Self::identity(rank);
        phi.images.swap(i as usize, j as usize);
        phi.inverse_images.swap(i as usize, j as usize);
        phi
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    pub fn image(&self, i: u32) -> &Word {
        &self.images[i as usize]
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(|g| self.images[g as usize].clone())
    }

    pub fn apply_inverse(&self, w: &Word) -> Word {
        w.substitute(|g| self.inverse_images[g as usize].clone())
    }

    /// Applies the `k`-th power (negative `k` uses the inverse).
    pub fn apply_power(&self, w: &Word, k: i64) -> Word {
        let mut out = w.clone();
        for _ in 0..k.unsigned_abs() {
            out = if k > 0 { self.apply(&out) } else { self.apply_inverse(&out) };
        }
        out
    }

    pub fn inverse(&self) -> Self {
        Automorphism {
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// `self ∘ other`, i.e. `a ↦ self(other(a))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        Automorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
            inverse_images: self.inverse_images.iter().map(|w| other.apply_inverse(w)).collect(),
        }
    }

    /// Integer matrix of the induced map on the abelianization; column `j`
    /// holds the exponent sums of the image of `a_j`.
    pub fn abelianized(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.images[j].exponent_sum(i as u32)).collect())
            .collect()
    }
}
