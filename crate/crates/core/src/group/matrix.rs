//! Matrices over the group ring, composed as right multipliers.

use std::fmt;

use super::oracle::NormalFormOracle;
use super::ring::GroupRingElement;
use super::word::Word;
use crate::error::Result;

/// A dense matrix of group-ring elements.
///
/// A matrix acts on row vectors over `ℓ²(G)` by right multiplication, so
/// composition reads `(A ∘ B)_{ij} = Σ_k B_{kj} · A_{ik}`. Under this rule
/// the Fox chain rule and the adjoint `(A*)_{ij} = (A_{ji})*` are
/// compatible: `(A ∘ B)* = B* ∘ A*`.
#[derive(Debug, Clone, PartialEq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, entries: vec![GroupRingElement::zero(); rows * cols] }
    }

    pub fn identity(m: usize) -> Self {
        Self::scalar(m, 1.0)
    }

    pub fn scalar(m: usize, c: f64) -> Self {
        let mut a = Self::zeros(m, m);
        for i in 0..m {
            a.set(i, i, GroupRingElement::scalar(c));
        }
        a
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GroupRingElement) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<GroupRingElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RingMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                GroupRingElement::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: GroupRingElement) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &GroupRingElement)> {
        self.entries.iter().enumerate().map(move |(n, x)| (n / self.cols, n % self.cols, x))
    }

    pub fn map(&self, f: impl Fn(&GroupRingElement) -> GroupRingElement) -> Self {
        RingMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&GroupRingElement) -> Result<GroupRingElement>) -> Result<Self> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(RingMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        self.map(|x| x.map_words(&f))
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|x| x.scale(s))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    /// `(self ∘ other)_{ij} = Σ_k other_{kj} · self_{ik}` in the free group.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = GroupRingElement::zero();
            for k in 0..self.cols {
                acc = acc.add(&other.get(k, j).mul(self.get(i, k)));
            }
            acc
        })
    }

    /// Composition followed by normal forms, i.e. the product in the
    /// quotient group ring.
    pub fn compose_in(&self, other: &Self, oracle: &NormalFormOracle) -> Result<Self> {
        self.compose(other).normalize(oracle)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).adjoint())
    }

    pub fn normalize(&self, oracle: &NormalFormOracle) -> Result<Self> {
        self.try_map(|x| x.normalize(oracle))
    }

    pub fn delete_row(&self, r: usize) -> Self {
        assert!(r < self.rows);
        Self::from_fn(self.rows - 1, self.cols, |i, j| {
            let src = if i < r { i } else { i + 1 };
            self.get(src, j).clone()
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.entries().all(|(i, j, x)| {
                if i == j {
                    *x == GroupRingElement::one()
                } else {
                    x.is_zero()
                }
            })
    }

    /// Row-sum and column-sum maxima of the entrywise ℓ¹ norms.
    pub fn l1_row_col_max(&self) -> (f64, f64) {
        let mut row = vec![0.0; self.rows];
        let mut col = vec![0.0; self.cols];
        for (i, j, x) in self.entries() {
            let n = x.l1_norm();
            row[i] += n;
            col[j] += n;
        }
        let max = |v: &[f64]| v.iter().copied().fold(0.0, f64::max);
        (max(&row), max(&col))
    }

    pub fn support(&self) -> usize {
        self.entries.iter().map(GroupRingElement::len).sum()
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
