//! Freely reduced words in a free group, stored run-length encoded.

use std::fmt;

/// A freely reduced word: a sequence of `(generator, exponent)` runs where
/// adjacent runs never share a generator and no exponent is zero. The empty
/// word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    runs: Vec<(u32, i32)>,
}

impl Word {
    pub fn identity() -> Self {
        Word { runs: Vec::new() }
    }

    pub fn generator(index: u32) -> Self {
        Self::power(index, 1)
    }

    pub fn power(index: u32, exponent: i32) -> Self {
        if exponent == 0 {
            Word::identity()
        } else {
            Word { runs: vec![(index, exponent)] }
        }
    }

    /// Freely reduces an arbitrary sequence of `(generator, exponent)` pairs.
    pub fn reduce<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (u32, i32)>,
    {
        let mut w = Word::identity();
        for (g, e) in raw {
            w.push_run(g, e);
        }
        w
    }

    /// Builds a word from single signed letters: `+(g+1)` for `g`, `-(g+1)` for `g⁻¹`.
    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = i32>,
    {
        Self::reduce(letters.into_iter().map(|l| {
            debug_assert!(l != 0);
            ((l.unsigned_abs() - 1), l.signum())
        }))
    }

    fn push_run(&mut self, g: u32, e: i32) {
        if e == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    self.runs.pop();
                }
            }
            _ => self.runs.push((g, e)),
        }
    }

    pub fn runs(&self) -> &[(u32, i32)] {
        &self.runs
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of letters (sum of absolute exponents).
    pub fn len(&self) -> usize {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Expands into single signed letters (see [`Word::from_letters`]).
    pub fn letters(&self) -> impl Iterator<Item = i32> + '_ {
        self.runs.iter().flat_map(|&(g, e)| {
            let l = (g as i32 + 1) * e.signum();
            std::iter::repeat_n(l, e.unsigned_abs() as usize)
        })
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.runs {
            w.push_run(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Exponent sum of one generator.
    pub fn exponent_sum(&self, generator: u32) -> i64 {
        self.runs
            .iter()
            .filter(|&&(g, _)| g == generator)
            .map(|&(_, e)| e as i64)
            .sum()
    }

    pub fn max_generator(&self) -> Option<u32> {
        self.runs.iter().map(|&(g, _)| g).max()
    }

    /// Renames generators through `f`, then re-reduces.
    pub fn map_generators(&self, f: impl Fn(u32) -> u32) -> Word {
        Word::reduce(self.runs.iter().map(|&(g, e)| (f(g), e)))
    }

    /// Substitutes a word for every generator (a free-group homomorphism).
    pub fn substitute(&self, images: impl Fn(u32) -> Word) -> Word {
        let mut out = Word::identity();
        for &(g, e) in &self.runs {
            let img = images(g);
            let piece = if e > 0 { img } else { img.inverse() };
            for _ in 0..e.unsigned_abs() {
                out = out.mul(&piece);
            }
        }
        out
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names: Some(names) }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: Option<&'a [String]>,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "e");
        }
        for (i, &(g, e)) in self.word.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match self.names.and_then(|n| n.get(g as usize)) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "x{g}")?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        WordDisplay { word: self, names: None }.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: u32 = 0;
    const H: u32 = 1;

    #[test]
    fn cancellation() {
        assert!(Word::reduce([(G, 1), (G, -1)]).is_identity());
    }

    #[test]
    fn cascade_cancellation() {
        let w = Word::reduce([(G, 1), (H, 1), (H, -1), (G, 1)]);
        assert_eq!(w, Word::power(G, 2));
    }

    #[test]
    fn already_reduced_is_unchanged() {
        let w = Word::reduce([(0, 1), (1, 1), (0, -1)]);
        assert_eq!(w.runs(), &[(0, 1), (1, 1), (0, -1)]);
    }

    #[test]
    fn letters_round_trip() {
        let w = Word::reduce([(0, 2), (1, -3), (2, 1)]);
        assert_eq!(Word::from_letters(w.letters()), w);
        assert_eq!(w.len(), 6);
    }

    #[test]
    fn inverse_and_pow() {
        let w = Word::reduce([(0, 1), (1, 2)]);
        assert!(w.mul(&w.inverse()).is_identity());
        assert_eq!(w.pow(-2), w.inverse().mul(&w.inverse()));
        assert!(w.pow(0).is_identity());
    }

    /// All words of length exactly `len` on two generators.
    fn words_of_len(len: usize) -> Vec<Vec<i32>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    [1, -1, 2, -2].into_iter().map(move |l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn reduction_is_confluent_exhaustive() {
        // all splits of every raw word up to length 8, plus sampled length 12
        for len in 0..=8 {
            for raw in words_of_len(len) {
                let whole = Word::from_letters(raw.iter().copied());
                for cut in 0..=raw.len() {
                    let u = Word::from_letters(raw[..cut].iter().copied());
                    let v = Word::from_letters(raw[cut..].iter().copied());
                    assert_eq!(u.mul(&v), whole, "raw {raw:?} cut {cut}");
                }
            }
        }
    }
}
