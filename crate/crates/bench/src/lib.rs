//! Shared fixtures for the engine benchmarks.

use l2alex_core::knot::catalog;
use l2alex_core::vna::DetParams;
use l2alex_core::{KnotPresentation, Word};

pub fn figure_eight() -> KnotPresentation {
    catalog("4_1")
        .and_then(|e| e.presentation())
        .expect("catalog entry")
        .expect("fibered presentation")
}

pub fn unknot() -> KnotPresentation {
    catalog("unknot")
        .and_then(|e| e.presentation())
        .expect("catalog entry")
        .expect("presentation")
}

pub fn params(terms: usize) -> DetParams {
    DetParams { terms, ..DetParams::default() }
}

/// Deterministic word on two generators that cancels heavily when reduced.
pub fn zigzag(len: usize) -> Vec<i32> {
    (0..len)
        .map(|i| match i % 6 {
            0 | 1 => 1,
            2 => 2,
            3 => -2,
            4 => -1,
            _ => 2,
        })
        .collect()
}

pub fn reduced_zigzag(len: usize) -> Word {
    Word::from_letters(zigzag(len))
}
