//! Free-group words, the real group ring, presentations and word-problem
//! oracles.

pub mod automorphism;
pub mod matrix;
pub mod oracle;
pub mod presentation;
pub mod ring;
pub mod word;

pub use automorphism::Automorphism;
pub use matrix::RingMatrix;
pub use oracle::NormalFormOracle;
pub use presentation::{default_names, parse_word, GroupPresentation};
pub use ring::GroupRingElement;
pub use word::Word;
