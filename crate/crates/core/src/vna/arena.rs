//! Streaming evaluation of the moments `τ(Xⁿ)` of a self-adjoint matrix
//! over the group ring.
//!
//! Group elements are `z^k · u` with `u` a fiber word. Fiber words are
//! interned in a suffix trie: node `(letter, next)` is `letter · word(next)`,
//! so left-multiplying a stored word by a short word only touches the new
//! prefix letters. Row `i` of `X^{∘k}` depends only on row `i` of
//! `X^{∘(k-1)}`, so rows are independent and each keeps its own arena.
//! For self-adjoint `X`, `τ(X^{a+b}) = Σ_i ⟨row_i X^a, row_i X^b⟩`, hence
//! depth `D` yields every moment up to `2D`, keeping only two levels alive.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::group::{NormalFormOracle, RingMatrix, Word};

#[derive(Debug, Clone)]
struct XTerm {
    id: u32,
    k: i32,
    letters: Box<[i32]>,
    c: f64,
}

/// The matrix `X` prepared for the moment recursion.
#[derive(Debug, Clone)]
pub struct SeriesOperator {
    m: usize,
    /// `terms[l * m + j]` lists the terms of `X_{lj}`.
    terms: Vec<Vec<XTerm>>,
    oracle: NormalFormOracle,
    twisted: bool,
}

impl SeriesOperator {
    pub fn new(x: &RingMatrix, oracle: &NormalFormOracle) -> Result<Self> {
        let m = x.rows();
        let mut terms = Vec::with_capacity(m * m);
        let mut id = 0u32;
        for l in 0..m {
            for j in 0..m {
                let mut v = Vec::new();
                for (w, c) in x.get(l, j).terms() {
                    let (k, u) = oracle.split(w)?;
                    v.push(XTerm { id, k: k as i32, letters: u.letters().collect(), c });
                    id += 1;
                }
                terms.push(v);
            }
        }
        let twisted = matches!(oracle, NormalFormOracle::FreeByCyclic { .. });
        Ok(SeriesOperator { m, terms, oracle: oracle.clone(), twisted })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn term_count(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MomentParams {
    /// Number of multiplication steps; moments up to `2·depth` result.
    pub depth: usize,
    /// Coefficients below this magnitude are dropped after each step.
    pub prune: f64,
    /// Per-row cap on stored entries; depth stops early when the next step
    /// is predicted to exceed it.
    pub max_support: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Moments {
    /// `moments[n-1] = τ(Xⁿ)` for `n = 1..=2·depth`.
    pub moments: Vec<f64>,
    /// Bound on `|computed − exact|` for each moment from pruning.
    pub slack: Vec<f64>,
    /// Total ℓ¹ mass dropped.
    pub pruned_mass: f64,
    /// Depth reached by every row.
    pub depth: usize,
    pub depth_limited: bool,
    /// Stored entries per depth, summed over rows.
    pub support: Vec<usize>,
}

struct Trie {
    letter: Vec<i32>,
    next: Vec<u32>,
    index: FxHashMap<u64, u32>,
}

impl Trie {
    fn new() -> Self {
        Trie { letter: vec![0], next: vec![0], index: FxHashMap::default() }
    }

    #[inline]
    fn prepend(&mut self, l: i32, node: u32) -> u32 {
        if node != 0 && self.letter[node as usize] == -l {
            return self.next[node as usize];
        }
        let key = ((l as u32 as u64) << 32) | node as u64;
        let fresh = self.letter.len() as u32;
        let id = *self.index.entry(key).or_insert(fresh);
        if id == fresh {
            self.letter.push(l);
            self.next.push(node);
        }
        id
    }

    fn prepend_word(&mut self, letters: &[i32], mut node: u32) -> u32 {
        for &l in letters.iter().rev() {
            node = self.prepend(l, node);
        }
        node
    }
}

#[inline]
fn pack(k: i32, node: u32) -> u64 {
    ((k as u32 as u64) << 32) | node as u64
}

#[inline]
fn unpack(key: u64) -> (i32, u32) {
    ((key >> 32) as u32 as i32, key as u32)
}

type Level = Vec<Vec<(u64, f64)>>;

fn inner(a: &Level, b: &Level) -> f64 {
    let mut s = 0.0;
    for (x, y) in a.iter().zip(b) {
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    s += x[i].1 * y[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    s
}

fn norm2(a: &Level) -> f64 {
    a.iter().flatten().map(|(_, c)| c * c).sum::<f64>().sqrt()
}

fn support(a: &Level) -> usize {
    a.iter().map(Vec::len).sum()
}

struct RowResult {
    moments: Vec<f64>,
    slack: Vec<f64>,
    pruned: f64,
    depth: usize,
    limited: bool,
    support: Vec<usize>,
}

fn run_row(op: &SeriesOperator, row: usize, params: &MomentParams) -> RowResult {
    let m = op.m;
    let mut trie = Trie::new();
    let mut powers: FxHashMap<(u32, i32), Box<[i32]>> = FxHashMap::default();
    let mut prev: Level = vec![Vec::new(); m];
    prev[row].push((pack(0, 0), 1.0));
    let (mut d_prev, mut n_prev) = (0.0f64, 1.0f64);
    let mut out = RowResult {
        moments: Vec::new(),
        slack: Vec::new(),
        pruned: 0.0,
        depth: 0,
        limited: false,
        support: Vec::new(),
    };
    let mut prev_support = 1usize;
    for step in 1..=params.depth {
        let mut acc: Vec<FxHashMap<u64, f64>> = (0..m).map(|_| FxHashMap::default()).collect();
        for (l, entries) in prev.iter().enumerate() {
            for &(key, cy) in entries {
                let (ky, node) = unpack(key);
                for (j, slot) in acc.iter_mut().enumerate() {
                    for xt in &op.terms[l * m + j] {
                        let letters: &[i32] = if op.twisted && ky != 0 {
                            powers.entry((xt.id, ky)).or_insert_with(|| {
                                let u = Word::from_letters(xt.letters.iter().copied());
                                op.oracle.fiber_power(&u, -(ky as i64)).letters().collect()
                            })
                        } else {
                            &xt.letters
                        };
                        let nn = trie.prepend_word(letters, node);
                        *slot.entry(pack(ky + xt.k, nn)).or_insert(0.0) += xt.c * cy;
                    }
                }
            }
        }
        let mut dropped = 0.0;
        let cur: Level = acc
            .into_iter()
            .map(|h| {
                let mut v: Vec<(u64, f64)> = h
                    .into_iter()
                    .filter(|&(_, c)| {
                        if c.abs() < params.prune || c == 0.0 {
                            dropped += c.abs();
                            false
                        } else {
                            true
                        }
                    })
                    .collect();
                v.sort_unstable_by_key(|&(k, _)| k);
                v
            })
            .collect();
        out.pruned += dropped;
        let d_cur = d_prev + dropped;
        let n_cur = norm2(&cur);
        // n = 2·step − 1 pairs levels (step−1, step); n = 2·step pairs (step, step)
        out.moments.push(inner(&prev, &cur));
        out.slack.push(d_prev * n_cur + d_cur * n_prev + d_prev * d_cur);
        out.moments.push(inner(&cur, &cur));
        out.slack.push(2.0 * d_cur * n_cur + d_cur * d_cur);
        let s = support(&cur);
        out.support.push(s);
        out.depth = step;
        if step < params.depth {
            let predicted = (s as f64) * (s as f64) / (prev_support.max(1) as f64);
            if s > params.max_support || predicted > params.max_support as f64 {
                out.limited = true;
                break;
            }
        }
        prev_support = s;
        prev = cur;
        d_prev = d_cur;
        n_prev = n_cur;
    }
    out
}

/// Moments `τ(Xⁿ)` for `n = 1..=2·depth`. Rows run in parallel and are
/// combined in row order, so results do not depend on the thread count.
pub fn moments(op: &SeriesOperator, params: &MomentParams) -> Moments {
    let rows: Vec<RowResult> = (0..op.m).into_par_iter().map(|i| run_row(op, i, params)).collect();
    let depth = rows.iter().map(|r| r.depth).min().unwrap_or(0);
    let limited = depth < params.depth;
    let mut moments = vec![0.0; 2 * depth];
    let mut slack = vec![0.0; 2 * depth];
    let mut support = vec![0usize; depth];
    let mut pruned = 0.0;
    for r in &rows {
        for n in 0..2 * depth {
            moments[n] += r.moments[n];
            slack[n] += r.slack[n];
        }
        for (s, &x) in support.iter_mut().zip(&r.support) {
            *s += x;
        }
        pruned += r.pruned;
    }
    Moments { moments, slack, pruned_mass: pruned, depth, depth_limited: limited || rows.iter().any(|r| r.limited), support }
}
