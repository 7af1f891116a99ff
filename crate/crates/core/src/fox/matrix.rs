use super::derivative::derive;
use crate::error::Result;
use crate::group::{GroupPresentation, RingMatrix};

/// Matrix of Fox derivatives of the relators: entry `(i, j)` is
/// `∂r_j/∂g_i`, kept over the free group.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxMatrix {
    pub entries: RingMatrix,
}

impl FoxMatrix {
    /// Square matrix obtained by removing generator row `i`.
    pub fn delete_row(&self, i: usize) -> RingMatrix {
        self.entries.delete_row(i)
    }
}

pub fn fox_matrix(p: &GroupPresentation) -> Result<FoxMatrix> {
    p.require_deficiency_one()?;
    let k = p.generator_count();
    let entries = RingMatrix::from_fn(k, k - 1, |i, j| derive(&p.relators()[j], i as u32));
    Ok(FoxMatrix { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::group::{GroupRingElement, Word};

    #[test]
    fn unknot_column() {
        let r = Word::from_letters([1, -2]);
        let p = GroupPresentation::with_rank(2, vec![r.clone()]).unwrap();
        let f = fox_matrix(&p).unwrap();
        assert_eq!(*f.entries.get(0, 0), GroupRingElement::one());
        assert_eq!(*f.entries.get(1, 0), GroupRingElement::term(r.clone(), -1.0));
        let d = f.delete_row(0);
        assert_eq!((d.rows(), d.cols()), (1, 1));
        assert_eq!(*d.get(0, 0), GroupRingElement::term(r, -1.0));
    }

    #[test]
    fn wrong_deficiency() {
        let p = GroupPresentation::with_rank(3, vec![Word::generator(0)]).unwrap();
        assert!(matches!(fox_matrix(&p), Err(Error::Deficiency { .. })));
    }
}
