//! Word-problem strategies: each oracle rewrites a word into a canonical
//! representative of the group element it denotes.

use std::collections::HashMap;

use super::automorphism::Automorphism;
use super::word::Word;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum NormalFormOracle {
    /// The free group on `rank` generators.
    Trivial { rank: usize },
    /// An infinite cyclic group; generator `i` maps to `images[i]`.
    Cyclic { images: Vec<i64>, representative: u32 },
    /// `F_n ⋊ ℤ`: generator 0 is the stable letter `z`, generator `i + 1`
    /// is the fiber generator `a_i`, and `z a z⁻¹ = φ(a)`.
    FreeByCyclic { monodromy: Automorphism },
}

impl NormalFormOracle {
    pub fn trivial(rank: usize) -> Self {
        NormalFormOracle::Trivial { rank }
    }

    /// Requires some generator with image `±1` to serve as the representative.
    pub fn cyclic(images: Vec<i64>) -> Result<Self> {
        let rep = images
            .iter()
            .position(|&x| x.abs() == 1)
            .ok_or_else(|| Error::NotAKnotGroup("no generator maps to ±1".into()))?;
        Ok(NormalFormOracle::Cyclic { images, representative: rep as u32 })
    }

    pub fn free_by_cyclic(monodromy: Automorphism) -> Self {
        NormalFormOracle::FreeByCyclic { monodromy }
    }

    pub fn alphabet_size(&self) -> usize {
        match self {
            NormalFormOracle::Trivial { rank } => *rank,
            NormalFormOracle::Cyclic { images, .. } => images.len(),
            NormalFormOracle::FreeByCyclic { monodromy } => monodromy.rank() + 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NormalFormOracle::Trivial { .. } => "trivial",
            NormalFormOracle::Cyclic { .. } => "cyclic",
            NormalFormOracle::FreeByCyclic { .. } => "free-by-cyclic",
        }
    }

    pub fn check_alphabet(&self, w: &Word) -> Result<()> {
        let size = self.alphabet_size();
        match w.max_generator() {
            Some(g) if g as usize >= size => Err(Error::Alphabet { index: g, size }),
            _ => Ok(()),
        }
    }

    /// Splits a word into `(k, u)` meaning the element `z^k · u` with `u` in
    /// the fiber. The free group is its own fiber with `k = 0`; the cyclic
    /// group has trivial fiber.
    pub fn split(&self, w: &Word) -> Result<(i64, Word)> {
        self.check_alphabet(w)?;
        match self {
            NormalFormOracle::Trivial { .. } => Ok((0, w.clone())),
            NormalFormOracle::Cyclic { images, .. } => {
                let k = w.runs().iter().map(|&(g, e)| images[g as usize] * e as i64).sum();
                Ok((k, Word::identity()))
            }
            NormalFormOracle::FreeByCyclic { monodromy } => {
                // right to left: x · z^k u = z^k φ^{-k}(x) u for fiber letters
                let mut k = 0i64;
                let mut u = Word::identity();
                let mut cache: HashMap<(u32, i64), Word> = HashMap::new();
                for &(g, e) in w.runs().iter().rev() {
                    if g == 0 {
                        k += e as i64;
                    } else {
                        let a = g - 1;
                        let img = cache
                            .entry((a, k))
                            .or_insert_with(|| monodromy.apply_power(&Word::generator(a), -k));
                        u = img.pow(e).mul(&u);
                    }
                }
                Ok((k, u))
            }
        }
    }

    /// Inverse of [`split`](Self::split) on canonical data.
    pub fn join(&self, k: i64, fiber: &Word) -> Word {
        match self {
            NormalFormOracle::Trivial { .. } => fiber.clone(),
            NormalFormOracle::Cyclic { images, representative } => {
                let r = *representative;
                Word::power(r, (k * images[r as usize]) as i32)
            }
            NormalFormOracle::FreeByCyclic { .. } => {
                Word::power(0, k as i32).mul(&fiber.map_generators(|g| g + 1))
            }
        }
    }

    pub fn normal_form(&self, w: &Word) -> Result<Word> {
        let (k, u) = self.split(w)?;
        Ok(self.join(k, &u))
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool> {
        let (k, u) = self.split(w)?;
        Ok(k == 0 && u.is_identity())
    }

    /// Action of conjugation by `z^j` on fiber words (`φ^j`); trivial for
    /// the free and cyclic oracles.
    pub fn fiber_power(&self, u: &Word, j: i64) -> Word {
        match self {
            NormalFormOracle::FreeByCyclic { monodromy } => monodromy.apply_power(u, j),
            _ => u.clone(),
        }
    }

    pub fn monodromy(&self) -> Option<&Automorphism> {
        match self {
            NormalFormOracle::FreeByCyclic { monodromy } => Some(monodromy),
            _ => None,
        }
    }
}
