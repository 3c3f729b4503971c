//! Exact canonical forms by pruned search over vertex orderings.
//!
//! The key for a graph is `[n] ++ degree sequence (descending) ++ adjacency
//! bits`, where the bits are the upper triangle of the relabeled adjacency
//! matrix in column-major order, maximized over every ordering that lists
//! vertices by descending degree. Isomorphic graphs admit exactly the same
//! set of degree-sorted orderings up to relabeling, so equal keys characterize
//! isomorphism; restricting to degree-sorted orderings is the degree-partition
//! pruning that keeps the search tractable at desk scale.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Default vertex cap for canonicalization.
pub const DEFAULT_CANON_CAP: usize = 12;

/// A total-order key identifying a graph's isomorphism class exactly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    key: Vec<u8>,
}

impl CanonicalForm {
    pub fn key(&self) -> &[u8] {
        &self.key
    }

    pub fn into_key(self) -> Vec<u8> {
        self.key
    }
}

/// Canonical key of `g` under the default cap.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalForm> {
    Ok(canonical_labeling_with_cap(g, cap)?.0)
}

/// Canonical key plus a witness ordering: `order[i]` is the input vertex
/// placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    canonical_labeling_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_labeling_with_cap(g: &Graph, cap: usize) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::SizeLimit(format!(
            "canonicalization capped at {cap} vertices, got {n}"
        )));
    }
    let mut search = Search::new(g);
    search.dfs(0);
    debug_assert!(search.have_leaf);

    let mut key = Vec::with_capacity(1 + n + n * (n - 1) / 2 / 8 + 1);
    key.push(n as u8);
    for j in 0..n {
        key.push(search.position_degrees[j] as u8);
    }
    let mut byte: u8 = 0;
    let mut filled: u8 = 0;
    for j in 1..n {
        for i in 0..j {
            let b = (search.best_cols[j] >> (j - 1 - i)) & 1;
            byte = (byte << 1) | b as u8;
            filled += 1;
            if filled == 8 {
                key.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        key.push(byte << (8 - filled));
    }
    Ok((CanonicalForm { key }, search.best_order))
}

/// The canonical representative: `g` relabeled by its canonical ordering.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labeling(g)?;
    g.relabeled(&order)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Degree required at each canonical position (the sorted sequence).
    position_degrees: Vec<u32>,
    /// Column bits of the best complete ordering found so far. Column `j`
    /// holds the adjacency between position `j` and positions `0..j`, with
    /// position 0 in the highest bit.
    best_cols: Vec<u64>,
    best_order: Vec<usize>,
    have_leaf: bool,
    order: Vec<usize>,
    used: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        let mut position_degrees: Vec<u32> = (0..n).map(|v| g.degree(v)).collect();
        position_degrees.sort_unstable_by(|a, b| b.cmp(a));
        Search {
            g,
            n,
            position_degrees,
            best_cols: vec![0; n],
            best_order: vec![0; n],
            have_leaf: false,
            order: Vec::with_capacity(n),
            used: 0,
        }
    }

    fn dfs(&mut self, depth: usize) {
        if depth == self.n {
            self.best_order.copy_from_slice(&self.order);
            self.have_leaf = true;
            return;
        }
        let want = self.position_degrees[depth];
        // Candidates of the right degree, with their column value against the
        // current prefix; explored best column first so pruning bites early.
        let mut cands: Vec<(u64, usize)> = Vec::new();
        for v in 0..self.n {
            if self.used & bit(v) != 0 || self.g.degree(v) != want {
                continue;
            }
            let mut col = 0u64;
            for &p in &self.order {
                col = (col << 1) | ((self.g.neighbors(p) >> v) & 1);
            }
            cands.push((col, v));
        }
        cands.sort_unstable_by(|a, b| b.cmp(a));

        let mut explored: Vec<(u64, usize)> = Vec::new();
        'cands: for (col, v) in cands {
            if self.have_leaf && col < self.best_cols[depth] {
                break; // sorted descending, nothing better follows
            }
            // Twins of an already explored same-column candidate add nothing:
            // the transposition is an automorphism, so every completion
            // through v has a bit-identical completion through the twin.
            for &(c, u) in &explored {
                if c == col && self.twins(u, v) {
                    continue 'cands;
                }
            }
            if self.have_leaf {
                if col > self.best_cols[depth] {
                    self.best_cols[depth] = col;
                    for t in depth + 1..self.n {
                        self.best_cols[t] = 0;
                    }
                }
            } else {
                self.best_cols[depth] = col;
            }
            explored.push((col, v));
            self.order.push(v);
            self.used |= bit(v);
            self.dfs(depth + 1);
            self.used &= !bit(v);
            self.order.pop();
        }
    }

    /// Neighborhoods agree once the pair itself is masked out, so swapping
    /// the two vertices is an automorphism.
    #[inline]
    fn twins(&self, u: usize, v: usize) -> bool {
        self.g.neighbors(u) & !bit(v) == self.g.neighbors(v) & !bit(u)
    }
}
