//! Finite formal sums of group elements with real coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::oracle::NormalFormOracle;
use super::word::Word;
use crate::error::Result;

/// An element of the real group ring of a free group. Terms are kept in a
/// `BTreeMap` so iteration order, and hence every floating-point reduction
/// built on it, is deterministic.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, f64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(1.0)
    }

    pub fn scalar(c: f64) -> Self {
        Self::term(Word::identity(), c)
    }

    pub fn term(word: Word, c: f64) -> Self {
        let mut x = Self::zero();
        x.add_term(word, c);
        x
    }

    pub fn from_word(word: Word) -> Self {
        Self::term(word, 1.0)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, f64)>,
    {
        let mut x = Self::zero();
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    }

    pub fn add_term(&mut self, word: Word, c: f64) {
        if c == 0.0 {
            return;
        }
        match self.terms.entry(word) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0.0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, f64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &Word) -> f64 {
        self.terms.get(word).copied().unwrap_or(0.0)
    }

    pub fn identity_coefficient(&self) -> f64 {
        self.coefficient(&Word::identity())
    }

    pub fn l1_norm(&self) -> f64 {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        if s == 0.0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// `c·w ↦ c·w⁻¹`.
    pub fn adjoint(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(w, &c)| (w.inverse(), c)).collect(),
        }
    }

    /// Convolution product in the free group.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    /// Applies a word map (e.g. a homomorphism) to every term and recollects.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, &c)| (f(w), c)))
    }

    pub fn try_map_words(&self, f: impl Fn(&Word) -> Result<Word>) -> Result<Self> {
        let mut out = Self::zero();
        for (w, &c) in &self.terms {
            out.add_term(f(w)?, c);
        }
        Ok(out)
    }

    /// Rewrites every word in the oracle's normal form, so that terms
    /// representing the same group element are merged.
    pub fn normalize(&self, oracle: &NormalFormOracle) -> Result<Self> {
        self.try_map_words(|w| oracle.normal_form(w))
    }

    /// Drops terms with `|c| < eta`; returns the dropped ℓ¹ mass.
    pub fn prune(&mut self, eta: f64) -> f64 {
        let mut dropped = 0.0;
        self.terms.retain(|_, c| {
            if c.abs() < eta {
                dropped += c.abs();
                false
            } else {
                true
            }
        });
        dropped
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> RingDisplay<'a> {
        RingDisplay { x: self, names: Some(names) }
    }
}

impl From<Word> for GroupRingElement {
    fn from(w: Word) -> Self {
        Self::from_word(w)
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::add(self, rhs)
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::sub(self, rhs)
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: Self) -> GroupRingElement {
        GroupRingElement::mul(self, rhs)
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        self.scale(-1.0)
    }
}

pub struct RingDisplay<'a> {
    x: &'a GroupRingElement,
    names: Option<&'a [String]>,
}

impl fmt::Display for RingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.x.terms().enumerate() {
            let sign = if c < 0.0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = c.abs();
            let word = match self.names {
                Some(n) => w.display_with(n).to_string(),
                None => w.to_string(),
            };
            if w.is_identity() {
                write!(f, "{a}")?;
            } else if a == 1.0 {
                write!(f, "{word}")?;
            } else {
                write!(f, "{a}*({word})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        RingDisplay { x: self, names: None }.fmt(f)
    }
}
