//! Integer Laurent polynomials and the classical Alexander polynomial.

use std::fmt;

use super::abelian::{abelianization, AbelianizationMap};
use super::matrix::fox_matrix;
use crate::error::{Error, Result};
use crate::group::{GroupPresentation, RingMatrix};

/// `Σ coeffs[i] · t^(low + i)`, trimmed so both ends are nonzero; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: vec![] }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i64, degree: i64) -> Self {
        Self::new(degree, vec![c])
    }

    /// Coefficients listed from degree 0 upward.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(0, coeffs.to_vec())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> i64 {
        self.low
    }

    pub fn high_degree(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn span(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: i64) -> i64 {
        let i = degree - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high_degree().max(other.high_degree());
        let coeffs = (low..=high).map(|d| self.coeff(d) + other.coeff(d)).collect();
        Self::new(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.low + other.low, coeffs)
    }

    /// Exact quotient, or `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        let lead = other.leading();
        let floor = self.low - other.low;
        while !rem.is_zero() {
            let shift = rem.high_degree() - other.high_degree();
            if shift < floor || rem.leading() % lead != 0 {
                return None;
            }
            let q = Self::monomial(rem.leading() / lead, shift);
            rem = rem.sub(&q.mul(other));
            quotient = quotient.add(&q);
        }
        Some(quotient)
    }

    /// Representative with lowest degree 0 and positive leading coefficient.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let sign = self.leading().signum();
        LaurentPoly { low: 0, coeffs: self.coeffs.iter().map(|c| c * sign).collect() }
    }

    /// `p(t⁻¹)`.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(-self.high_degree(), coeffs)
    }

    /// Symmetric up to a unit `±t^m`.
    pub fn is_symmetric(&self) -> bool {
        self.normalized() == self.reciprocal().normalized()
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().enumerate().map(|(i, &c)| c as f64 * t.powi((self.low + i as i64) as i32)).sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let d = self.low + i as i64;
            let a = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (d, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{d}")?,
                _ => write!(f, "{a}t^{d}")?,
            }
        }
        Ok(())
    }
}

/// Determinant by fraction-free elimination with exact division.
pub fn determinant(matrix: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = matrix.len();
    if n == 0 {
        return Ok(LaurentPoly::constant(1));
    }
    let mut a: Vec<Vec<LaurentPoly>> = matrix.to_vec();
    let mut sign = 1;
    let mut prev = LaurentPoly::constant(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Numeric("inexact division in fraction-free elimination".into()))?;
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { d.neg() } else { d })
}

/// Image of a group-ring matrix under `g ↦ t^{α(g)}`; coefficients must be
/// integers.
pub fn abelianize_matrix(m: &RingMatrix, alpha: &AbelianizationMap) -> Result<Vec<Vec<LaurentPoly>>> {
    let mut out = vec![vec![LaurentPoly::zero(); m.cols()]; m.rows()];
    for (i, j, x) in m.entries() {
        let mut acc = LaurentPoly::zero();
        for (w, c) in x.terms() {
            if c.fract() != 0.0 {
                return Err(Error::InvalidParameter("non-integer coefficient".into()));
            }
            acc = acc.add(&LaurentPoly::monomial(c as i64, alpha.apply(w)));
        }
        out[i][j] = acc;
    }
    Ok(out)
}

/// Normalized Alexander polynomial from the Fox matrix of a deficiency-one
/// presentation.
pub fn classical_alexander(p: &GroupPresentation) -> Result<LaurentPoly> {
    let alpha = abelianization(p)?;
    let fox = fox_matrix(p)?;
    let row = alpha
        .exponents
        .iter()
        .position(|&x| x != 0)
        .ok_or_else(|| Error::NotAKnotGroup("abelianization is zero".into()))?;
    let ab = abelianize_matrix(&fox.delete_row(row), &alpha)?;
    let det = determinant(&ab)?;
    // det(F_i) (t − 1) = ±t^m (t^{α(g_i)} − 1) Δ
    let a = alpha.exponents[row].abs();
    let num = det.mul(&LaurentPoly::from_coeffs(&[-1, 1]));
    let den = LaurentPoly::monomial(1, a).sub(&LaurentPoly::constant(1));
    let delta = num
        .div_exact(&den)
        .ok_or_else(|| Error::Numeric("Alexander normalization is not exact".into()))?;
    Ok(delta.normalized())
}
