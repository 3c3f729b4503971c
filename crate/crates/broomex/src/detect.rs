//! Exact broom containment by depth-first search over simple paths.
//!
//! A graph contains `B(ell, s)` iff it has a path on `ell` vertices whose
//! penultimate vertex keeps at least `s` neighbors off the path. By reversal
//! symmetry it suffices to test the penultimate vertex next to the path's far
//! endpoint, so each completed path costs one set difference and a popcount.

use crate::families::BroomSpec;
use crate::graph::{bit, bits, Graph};

/// A concrete broom embedding: `path` lists the `ell` path vertices in order,
/// the center is `path[ell - 2]`, and `leaves` are its `s` extra neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BroomWitness {
    pub path: Vec<usize>,
    pub leaves: Vec<usize>,
}

/// Does `g` contain `B(ell, s)` as a subgraph?
pub fn contains_broom(g: &Graph, spec: &BroomSpec) -> bool {
    find_broom(g, spec).is_some()
}

pub fn is_broom_free(g: &Graph, spec: &BroomSpec) -> bool {
    !contains_broom(g, spec)
}

/// Like [`contains_broom`], but returns an embedding. The witness is built
/// only at the moment of success; the search loop itself carries nothing
/// beyond the path stack.
pub fn find_broom(g: &Graph, spec: &BroomSpec) -> Option<BroomWitness> {
    let n = g.vertex_count();
    let ell = spec.ell() as usize;
    let s = spec.s() as usize;
    if n < ell + s {
        return None;
    }
    // Low-degree endpoints first: sparse broom-free graphs reject faster.
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_unstable_by_key(|&v| g.degree(v));

    let mut path = Vec::with_capacity(ell);
    for &v in &starts {
        path.push(v);
        if let Some(w) = extend_path(g, ell, s, &mut path, bit(v)) {
            return Some(w);
        }
        path.pop();
    }
    None
}

fn extend_path(
    g: &Graph,
    ell: usize,
    s: usize,
    path: &mut Vec<usize>,
    visited: u64,
) -> Option<BroomWitness> {
    if path.len() == ell {
        let center = path[ell - 2];
        let extra = g.neighbors(center) & !visited;
        if extra.count_ones() as usize >= s {
            return Some(BroomWitness {
                path: path.clone(),
                leaves: bits(extra).take(s).collect(),
            });
        }
        return None;
    }
    let last = *path.last().unwrap();
    for w in bits(g.neighbors(last) & !visited) {
        path.push(w);
        if let Some(witness) = extend_path(g, ell, s, path, visited | bit(w)) {
            return Some(witness);
        }
        path.pop();
    }
    None
}

/// Is some vertex of degree at least `ell + s` the endpoint of a simple path
/// on `ell - 1` vertices? For broom-free graphs the answer is always no; this
/// is the working consequence of broom-freeness that the structural
/// diagnostics rely on.
pub fn has_heavy_path_endpoint(g: &Graph, spec: &BroomSpec) -> bool {
    let n = g.vertex_count();
    let threshold = spec.ell() + spec.s();
    let path_len = (spec.ell() - 1) as usize;
    if path_len > n {
        return false;
    }
    (0..n)
        .filter(|&v| g.degree(v) >= threshold)
        .any(|v| exists_path_from(g, v, path_len))
}

fn exists_path_from(g: &Graph, start: usize, len: usize) -> bool {
    fn rec(g: &Graph, cur: usize, remaining: usize, visited: u64) -> bool {
        if remaining == 0 {
            return true;
        }
        bits(g.neighbors(cur) & !visited).any(|w| rec(g, w, remaining - 1, visited | bit(w)))
    }
    rec(g, start, len - 1, bit(start))
}

/// Checks an embedding against the graph it claims to live in.
pub fn verify_broom_witness(g: &Graph, spec: &BroomSpec, w: &BroomWitness) -> bool {
    let ell = spec.ell() as usize;
    let s = spec.s() as usize;
    if w.path.len() != ell || w.leaves.len() != s {
        return false;
    }
    let mut seen = 0u64;
    for &v in w.path.iter().chain(&w.leaves) {
        if v >= g.vertex_count() || seen & bit(v) != 0 {
            return false;
        }
        seen |= bit(v);
    }
    if !w.path.windows(2).all(|e| g.has_edge(e[0], e[1])) {
        return false;
    }
    let center = w.path[ell - 2];
    w.leaves.iter().all(|&leaf| g.has_edge(center, leaf))
}
