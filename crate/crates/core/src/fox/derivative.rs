//! Free differential calculus.

use crate::error::{Error, Result};
use crate::group::{GroupRingElement, Word};

/// `∂w/∂g_i` for a word over an alphabet of `rank` generators.
pub fn fox_derivative(w: &Word, i: u32, rank: usize) -> Result<GroupRingElement> {
    check(w, i, rank)?;
    Ok(derive(w, i))
}

/// Linear extension to group-ring elements.
pub fn fox_derivative_element(x: &GroupRingElement, i: u32, rank: usize) -> Result<GroupRingElement> {
    let mut out = GroupRingElement::zero();
    for (w, c) in x.terms() {
        check(w, i, rank)?;
        out = out.add(&derive(w, i).scale(c));
    }
    Ok(out)
}

fn check(w: &Word, i: u32, rank: usize) -> Result<()> {
    if i as usize >= rank {
        return Err(Error::Alphabet { index: i, size: rank });
    }
    match w.max_generator() {
        Some(g) if g as usize >= rank => Err(Error::Alphabet { index: g, size: rank }),
        _ => Ok(()),
    }
}

pub(crate) fn derive(w: &Word, i: u32) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &(g, e) in w.runs() {
        if g == i {
            if e > 0 {
                for j in 0..e {
                    out.add_term(prefix.mul(&Word::power(g, j)), 1.0);
                }
            } else {
                for j in 1..=-e {
                    out.add_term(prefix.mul(&Word::power(g, -j)), -1.0);
                }
            }
        }
        prefix = prefix.mul(&Word::power(g, e));
    }
    out
}
