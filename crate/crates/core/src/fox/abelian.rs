//! The abelianization of a knot group and integer diagonalization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Word};

/// Surjection onto ℤ, stored as the image of each generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationMap {
    pub exponents: Vec<i64>,
}

impl AbelianizationMap {
    pub fn apply(&self, w: &Word) -> i64 {
        w.runs().iter().map(|&(g, e)| self.exponents[g as usize] * e as i64).sum()
    }

    pub fn image(&self, generator: usize) -> i64 {
        self.exponents[generator]
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relator_matrix(p: &GroupPresentation) -> Vec<Vec<i64>> {
    p.relators()
        .iter()
        .map(|r| (0..p.generator_count()).map(|g| r.exponent_sum(g as u32)).collect())
        .collect()
}

/// Result of diagonalizing an integer matrix by unimodular row and column
/// operations: `U·A·V = diag(d_0, …, d_{rank-1}, 0, …)`.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub diagonal: Vec<i128>,
    /// The column transform `V`, square of size `cols`.
    pub column_transform: Vec<Vec<i128>>,
}

impl Diagonalization {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Basis of the integer kernel: the last `cols − rank` columns of `V`.
    pub fn kernel(&self) -> Vec<Vec<i128>> {
        let n = self.column_transform.len();
        (self.rank()..n).map(|j| (0..n).map(|i| self.column_transform[i][j]).collect()).collect()
    }
}

pub fn diagonalize(a: &[Vec<i64>], cols: usize) -> Diagonalization {
    let rows = a.len();
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut v: Vec<Vec<i128>> = (0..cols).map(|i| (0..cols).map(|j| (i == j) as i128).collect()).collect();
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block as pivot
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            let pivot_row = m[t].clone();
            for row in m.iter_mut().skip(t + 1) {
                let q = row[t] / p;
                if q != 0 {
                    for j in t..cols {
                        row[j] -= q * pivot_row[j];
                    }
                }
                dirty |= row[t] != 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if !dirty {
                break;
            }
            // a remainder is smaller than the pivot: bring it to (t, t)
            let (ri, rj) = (t..rows)
                .map(|i| (i, t))
                .chain((t..cols).map(|j| (t, j)))
                .filter(|&(i, j)| (i, j) != (t, t) && m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
                .expect("dirty implies a nonzero remainder");
            if ri != t {
                m.swap(t, ri);
            } else {
                for row in m.iter_mut() {
                    row.swap(t, rj);
                }
                for row in v.iter_mut() {
                    row.swap(t, rj);
                }
            }
        }
        diagonal.push(m[t][t]);
        t += 1;
    }
    Diagonalization { diagonal, column_transform: v }
}

/// The abelianization of a deficiency-one presentation whose first homology
/// is infinite cyclic. The sign makes the first nonzero image positive.
pub fn abelianization(p: &GroupPresentation) -> Result<AbelianizationMap> {
    p.require_deficiency_one()?;
    let k = p.generator_count();
    let d = diagonalize(&relator_matrix(p), k);
    if d.rank() != k - 1 {
        return Err(Error::NotAKnotGroup(format!("first homology has rank {}", k - d.rank())));
    }
    if let Some(t) = d.diagonal.iter().find(|x| x.abs() != 1) {
        return Err(Error::NotAKnotGroup(format!("first homology has torsion ℤ/{}", t.abs())));
    }
    let mut alpha: Vec<i64> = d.kernel()[0].iter().map(|&x| x as i64).collect();
    if alpha.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        alpha.iter_mut().for_each(|x| *x = -*x);
    }
    let map = AbelianizationMap { exponents: alpha };
    debug_assert!(p.relators().iter().all(|r| map.apply(r) == 0));
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot() {
        let p = GroupPresentation::with_rank(2, vec![Word::from_letters([1, -2])]).unwrap();
        assert_eq!(abelianization(&p).unwrap().exponents, vec![1, 1]);
    }

    #[test]
    fn torus_presentation() {
        // x^p y^-q with p=2, q=3: x ↦ 3, y ↦ 2
        let r = Word::reduce([(0, 2), (1, -3)]);
        let p = GroupPresentation::with_rank(2, vec![r.clone()]).unwrap();
        let a = abelianization(&p).unwrap();
        assert_eq!(a.exponents, vec![3, 2]);
        assert_eq!(a.apply(&r), 0);
    }

    #[test]
    fn torsion_rejected() {
        // < x, y | x^2 > has H1 = Z + Z/2
        let p = GroupPresentation::with_rank(2, vec![Word::power(0, 2)]).unwrap();
        assert!(matches!(abelianization(&p), Err(Error::NotAKnotGroup(_))));
    }

    #[test]
    fn rank_two_rejected() {
        let p = GroupPresentation::with_rank(2, vec![Word::identity()]).unwrap();
        assert!(matches!(abelianization(&p), Err(Error::NotAKnotGroup(_))));
    }

    #[test]
    fn diagonalization_kernel_is_kernel() {
        let a = vec![vec![4, 6, -2], vec![2, 2, 8]];
        let d = diagonalize(&a, 3);
        for k in d.kernel() {
            for row in &a {
                let s: i128 = row.iter().zip(&k).map(|(&x, &y)| x as i128 * y).sum();
                assert_eq!(s, 0);
            }
        }
    }
}
