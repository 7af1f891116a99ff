//! Matrices over the quotient group ring after the abelian twist.

use crate::error::{Error, Result};
use crate::fox::AbelianizationMap;
use crate::group::{GroupRingElement, NormalFormOracle, RingMatrix, Word};

/// A square matrix whose entries are in oracle normal form and whose
/// coefficients already carry the twist `t^{α(g)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedMatrix {
    entries: RingMatrix,
    t: f64,
    oracle: NormalFormOracle,
}

impl TwistedMatrix {
    /// Wraps a matrix whose coefficients are final (no further twisting).
    pub fn new(entries: RingMatrix, t: f64, oracle: NormalFormOracle) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::InvalidParameter(format!(
                "matrix is {}×{}, square required",
                entries.rows(),
                entries.cols()
            )));
        }
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::InvalidParameter(format!("twist parameter t = {t} must be positive")));
        }
        let entries = entries.normalize(&oracle)?;
        Ok(TwistedMatrix { entries, t, oracle })
    }

    /// `λ·Id_m` over the given oracle.
    pub fn scalar(m: usize, lambda: f64, oracle: NormalFormOracle) -> Self {
        TwistedMatrix { entries: RingMatrix::scalar(m, lambda), t: 1.0, oracle }
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn oracle(&self) -> &NormalFormOracle {
        &self.oracle
    }

    pub fn entries(&self) -> &RingMatrix {
        &self.entries
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(TwistedMatrix {
            entries: self.entries.compose_in(&other.entries, &self.oracle)?,
            t: self.t,
            oracle: self.oracle.clone(),
        })
    }

    pub fn adjoint(&self) -> Result<Self> {
        Ok(TwistedMatrix {
            entries: self.entries.adjoint().normalize(&self.oracle)?,
            t: self.t,
            oracle: self.oracle.clone(),
        })
    }

    pub fn scale(&self, s: f64) -> Self {
        TwistedMatrix { entries: self.entries.scale(s), t: self.t, oracle: self.oracle.clone() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        TwistedMatrix {
            entries: self.entries.direct_sum(&other.entries),
            t: self.t,
            oracle: self.oracle.clone(),
        }
    }
}

/// Applies `Σ c_g g ↦ Σ c_g t^{α(g)} g` entrywise, then normal forms.
pub fn twist(f: &RingMatrix, t: f64, alpha: &AbelianizationMap, oracle: &NormalFormOracle) -> Result<TwistedMatrix> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::InvalidParameter(format!("twist parameter t = {t} must be positive")));
    }
    let twisted = f.map(|x| twist_element(x, t, alpha));
    TwistedMatrix::new(twisted, t, oracle.clone())
}

pub fn twist_element(x: &GroupRingElement, t: f64, alpha: &AbelianizationMap) -> GroupRingElement {
    GroupRingElement::from_terms(x.terms().map(|(w, c)| (w.clone(), c * t.powi(alpha.apply(w) as i32))))
}

/// Twisted word `c · t^{α(w)} · w`.
pub fn twisted_term(w: Word, c: f64, t: f64, alpha: &AbelianizationMap) -> GroupRingElement {
    let s = t.powi(alpha.apply(&w) as i32);
    GroupRingElement::term(w, c * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_twist_is_identity() {
        let alpha = AbelianizationMap { exponents: vec![1, 0] };
        let f = RingMatrix::from_rows(vec![vec![GroupRingElement::from_terms([
            (Word::from_letters([1, 2]), 2.0),
            (Word::from_letters([-2]), -1.0),
        ])]]);
        let m = twist(&f, 1.0, &alpha, &NormalFormOracle::trivial(2)).unwrap();
        assert_eq!(*m.entries(), f);
    }

    #[test]
    fn stable_letter_scaled() {
        let alpha = AbelianizationMap { exponents: vec![1] };
        let f = RingMatrix::from_rows(vec![vec![GroupRingElement::from_word(Word::generator(0))]]);
        let m = twist(&f, 2.0, &alpha, &NormalFormOracle::trivial(1)).unwrap();
        assert_eq!(m.entries().get(0, 0).coefficient(&Word::generator(0)), 2.0);
    }

    #[test]
    fn nonpositive_t_rejected() {
        let alpha = AbelianizationMap { exponents: vec![1] };
        let f = RingMatrix::identity(1);
        assert!(twist(&f, 0.0, &alpha, &NormalFormOracle::trivial(1)).is_err());
        assert!(twist(&f, -1.0, &alpha, &NormalFormOracle::trivial(1)).is_err());
    }
}
