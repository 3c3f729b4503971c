//! Brute-force subgraph counting. This is the oracle the fast decision
//! procedures are checked against; it is deliberately simple and is capped
//! to stay tractable.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Default host-size cap for the oracle.
pub const DEFAULT_NAIVE_CAP: usize = 10;

/// Number of unlabeled copies of `pattern` in `host`: injective
/// edge-preserving maps divided by the pattern's automorphism count. This is
/// the convention under which the star count equals the binomial degree sum.
pub fn count_subgraph_naive(host: &Graph, pattern: &Graph) -> Result<u64> {
    count_subgraph_naive_with_cap(host, pattern, DEFAULT_NAIVE_CAP)
}

pub fn count_subgraph_naive_with_cap(host: &Graph, pattern: &Graph, cap: usize) -> Result<u64> {
    if host.vertex_count() > cap {
        return Err(Error::SizeLimit(format!(
            "naive counting capped at {cap} host vertices, got {}",
            host.vertex_count()
        )));
    }
    if pattern.vertex_count() > host.vertex_count() {
        return Ok(0);
    }
    let embeddings = count_embeddings(pattern, host);
    let automorphisms = count_embeddings(pattern, pattern);
    debug_assert!(automorphisms >= 1);
    debug_assert_eq!(embeddings % automorphisms, 0);
    Ok(embeddings / automorphisms)
}

/// Injective maps from `pattern` vertices to `host` vertices under which every
/// pattern edge lands on a host edge.
fn count_embeddings(pattern: &Graph, host: &Graph) -> u64 {
    let p = pattern.vertex_count();
    let mut image = vec![0usize; p];
    let mut used: u64 = 0;
    count_rec(pattern, host, 0, &mut image, &mut used)
}

fn count_rec(
    pattern: &Graph,
    host: &Graph,
    depth: usize,
    image: &mut [usize],
    used: &mut u64,
) -> u64 {
    if depth == pattern.vertex_count() {
        return 1;
    }
    let mut total = 0;
    'hosts: for h in 0..host.vertex_count() {
        if *used & bit(h) != 0 {
            continue;
        }
        for (q, &hq) in image.iter().enumerate().take(depth) {
            if pattern.has_edge(q, depth) && !host.has_edge(hq, h) {
                continue 'hosts;
            }
        }
        image[depth] = h;
        *used |= bit(h);
        total += count_rec(pattern, host, depth + 1, image, used);
        *used &= !bit(h);
    }
    total
}
