//! Braid words and the Wirtinger presentation of their closures.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupPresentation, Word};

/// A braid word; letter `±k` stands for `σ_k^{±1}` with `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Braid {
    pub strands: usize,
    pub letters: Vec<i32>,
}

/// Parses whitespace-separated tokens `s<k>` or `s<k>^-1` (also `^1`).
pub fn parse_braid(text: &str) -> Result<Braid> {
    let mut letters = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    let err = |position: usize, message: &str| Error::Parse { position, message: message.to_string() };
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if bytes[pos] != b's' && bytes[pos] != b'S' {
            return Err(err(pos, "expected `s<k>`"));
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let k: i32 = text[start..pos].parse().map_err(|_| err(start, "expected a generator index"))?;
        if k < 1 {
            return Err(err(start, "generator index must be at least 1"));
        }
        let mut sign = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let e = pos;
            if text[pos..].starts_with("-1") {
                sign = -1;
                pos += 2;
            } else if text[pos..].starts_with("+1") {
                pos += 2;
            } else if text[pos..].starts_with('1') {
                pos += 1;
            } else {
                return Err(err(e, "exponent must be 1 or -1"));
            }
        }
        if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            return Err(err(pos, "expected whitespace between tokens"));
        }
        letters.push(sign * k);
    }
    let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
    Ok(Braid { strands, letters })
}

impl Braid {
    /// `perm[p]` is the bottom position of the strand starting at top position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[position] = strand
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p];
                }
            }
        }
        cycles
    }

    /// Wirtinger presentation of the closure. Every generator is a meridian
    /// and one redundant relator is dropped.
    pub fn wirtinger(&self) -> Result<GroupPresentation> {
        let c = self.components();
        if c != 1 {
            return Err(Error::NotAKnotGroup(format!("braid closure has {c} components")));
        }
        let n = self.strands;
        let mut label: Vec<u32> = (0..n as u32).collect();
        let mut arcs = n as u32;
        let mut relators = Vec::new();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let new = arcs;
            arcs += 1;
            if l > 0 {
                // strand at i passes over to i + 1; the under arc at i + 1 continues at i
                let (o, u) = (label[i], label[i + 1]);
                relators.push(Word::reduce([(o, 1), (u, 1), (o, -1), (new, -1)]));
                label[i] = new;
                label[i + 1] = o;
            } else {
                // strand at i + 1 passes over to i; the under arc at i continues at i + 1
                let (o, u) = (label[i + 1], label[i]);
                relators.push(Word::reduce([(o, -1), (u, 1), (o, 1), (new, -1)]));
                label[i] = o;
                label[i + 1] = new;
            }
        }
        let mut uf = UnionFind::new(arcs as usize);
        for (p, &l) in label.iter().enumerate() {
            uf.union(p, l as usize);
        }
        let mut class = vec![u32::MAX; arcs as usize];
        let mut count = 0u32;
        for a in 0..arcs as usize {
            let r = uf.find(a);
            if class[r] == u32::MAX {
                class[r] = count;
                count += 1;
            }
            class[a] = class[r];
        }
        let mut relators: Vec<Word> = relators.iter().map(|r| r.map_generators(|g| class[g as usize])).collect();
        if relators.len() + 1 > count as usize {
            relators.pop();
        }
        let names = (0..count).map(|i| format!("x{}", i + 1)).collect();
        let p = GroupPresentation::new(names, relators)?;
        p.require_deficiency_one()?;
        Ok(p)
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, &l) in self.letters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", l.unsigned_abs())?;
            if l < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
