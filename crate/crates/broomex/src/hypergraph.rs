//! Common-neighborhood r-uniform hypergraphs over a host graph, and Berge
//! path detection.
//!
//! For a host graph and a broom `B(ell, s)` with `k = floor((ell-2)/2)`, the
//! r-sets of vertices are classified by the size of their common
//! neighborhood: H1 holds the r-sets with more than `k` common neighbors, H2
//! those with more than `ell + s`, H3 exactly `k`, H4 fewer than `k`.
//! H1, H3 and H4 partition all r-sets; H2 is a subhypergraph of H1.
//!
//! In a broom-free host, H2 can hold no Berge path of `k + 1` hyperedges:
//! interleaving each hyperedge's private common neighbor into the path of
//! core vertices yields a long path whose endpoints have degree above
//! `ell + s`, which unwinds into a broom embedding. [`check_berge_free`]
//! runs that reasoning forward on a concrete host and, when a Berge path is
//! found, surrenders the broom it implies.

use crate::detect::{contains_broom, BroomWitness};
use crate::error::{Error, Result};
use crate::families::BroomSpec;
use crate::graph::{bit, bits, low_bits, Graph};

/// Cap on the number of r-sets a classification will materialize.
pub const RSET_CAP: u64 = 1 << 22;

/// An r-uniform hypergraph on the host's vertex set. Hyperedges are vertex
/// bitsets with popcount exactly `r`, pairwise distinct; `common` optionally
/// carries each hyperedge's common neighborhood in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformHypergraph {
    r: u32,
    n: usize,
    edges: Vec<u64>,
    common: Option<Vec<u64>>,
}

impl UniformHypergraph {
    pub fn new(r: u32, n: usize, edges: Vec<u64>) -> Result<Self> {
        Self::build(r, n, edges, None)
    }

    pub fn with_common(r: u32, n: usize, edges: Vec<u64>, common: Vec<u64>) -> Result<Self> {
        if common.len() != edges.len() {
            return Err(Error::InvalidParameter(
                "one common-neighborhood bitset per hyperedge".into(),
            ));
        }
        Self::build(r, n, edges, Some(common))
    }

    fn build(r: u32, n: usize, edges: Vec<u64>, common: Option<Vec<u64>>) -> Result<Self> {
        if n == 0 || n > crate::graph::MAX_VERTICES {
            return Err(Error::InvalidParameter(format!("bad vertex count {n}")));
        }
        let mask = low_bits(n);
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate hyperedge".into()));
        }
        for &e in &edges {
            if e & !mask != 0 {
                return Err(Error::InvalidParameter(
                    "hyperedge leaves the vertex set".into(),
                ));
            }
            if e.count_ones() != r {
                return Err(Error::InvalidParameter(format!(
                    "hyperedge of size {}, expected {r}",
                    e.count_ones()
                )));
            }
        }
        Ok(UniformHypergraph {
            r,
            n,
            edges,
            common,
        })
    }

    pub fn uniformity(&self) -> u32 {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn common_neighborhoods(&self) -> Option<&[u64]> {
        self.common.as_deref()
    }
}

/// The four common-neighborhood classes of all r-sets of the host.
#[derive(Clone, Debug)]
pub struct NbrhoodClassification {
    pub spec: BroomSpec,
    pub r: u32,
    pub k: u32,
    /// More than k common neighbors.
    pub h1: UniformHypergraph,
    /// More than ell + s common neighbors (a subhypergraph of h1).
    pub h2: UniformHypergraph,
    /// Exactly k.
    pub h3: UniformHypergraph,
    /// Fewer than k.
    pub h4: UniformHypergraph,
}

/// Class sizes in order H1, H2, H3, H4.
impl NbrhoodClassification {
    pub fn sizes(&self) -> [usize; 4] {
        [
            self.h1.edge_count(),
            self.h2.edge_count(),
            self.h3.edge_count(),
            self.h4.edge_count(),
        ]
    }
}

/// Common neighborhood of a vertex set: everyone adjacent to all of it.
/// Members can never appear, since no vertex neighbors itself.
pub fn common_neighborhood(g: &Graph, set: u64) -> u64 {
    let mut acc = low_bits(g.vertex_count());
    for v in bits(set) {
        acc &= g.neighbors(v);
    }
    acc
}

/// Classifies every r-set of the host by common-neighborhood size.
pub fn classify_rsets(g: &Graph, r: u32, spec: &BroomSpec) -> Result<NbrhoodClassification> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "classification needs r >= 2, got {r}"
        )));
    }
    let n = g.vertex_count();
    let total = crate::graph::binomial(n as u64, r as u64);
    if total > RSET_CAP as u128 {
        return Err(Error::SizeLimit(format!(
            "C({n},{r}) = {total} r-sets exceeds the cap {RSET_CAP}"
        )));
    }
    let k = spec.k();
    let heavy = spec.ell() + spec.s();

    let mut sets: [Vec<u64>; 4] = Default::default();
    let mut commons: [Vec<u64>; 4] = Default::default();
    let mut push = |class: usize, mask: u64, cn: u64| {
        sets[class].push(mask);
        commons[class].push(cn);
    };
    for_each_rset(n, r as usize, |mask| {
        let cn = common_neighborhood(g, mask);
        let size = cn.count_ones();
        if size > k {
            push(0, mask, cn);
            if size > heavy {
                push(1, mask, cn);
            }
        } else if size == k {
            push(2, mask, cn);
        } else {
            push(3, mask, cn);
        }
    });

    let [s1, s2, s3, s4] = sets;
    let [c1, c2, c3, c4] = commons;
    Ok(NbrhoodClassification {
        spec: *spec,
        r,
        k,
        h1: UniformHypergraph::with_common(r, n, s1, c1)?,
        h2: UniformHypergraph::with_common(r, n, s2, c2)?,
        h3: UniformHypergraph::with_common(r, n, s3, c3)?,
        h4: UniformHypergraph::with_common(r, n, s4, c4)?,
    })
}

/// Visits every r-subset of `0..n` as a bitmask, in lexicographic index order.
fn for_each_rset<F: FnMut(u64)>(n: usize, r: usize, mut f: F) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &v| m | bit(v));
        f(mask);
        // Advance the rightmost index that can still move.
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] + (r - i) < n {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// A Berge path: hyperedge indices `edges[0..L]` and distinct vertices
/// `vertices[0..=L]` with consecutive vertices contained in the matching
/// hyperedge. Length counts hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergePath {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

/// Finds a Berge path of exactly `length` hyperedges, if any.
pub fn find_berge_path(h: &UniformHypergraph, length: usize) -> Option<BergePath> {
    assert!(length >= 1, "a Berge path has at least one hyperedge");
    if h.edge_count() < length || h.vertex_count() < length + 1 {
        return None;
    }
    let mut used_edges = vec![false; h.edge_count()];
    let mut edge_stack = Vec::with_capacity(length);
    let mut vertex_stack = Vec::with_capacity(length + 1);
    for start in 0..h.vertex_count() {
        vertex_stack.push(start);
        if berge_rec(
            h,
            length,
            bit(start),
            &mut used_edges,
            &mut edge_stack,
            &mut vertex_stack,
        ) {
            return Some(BergePath {
                edges: edge_stack,
                vertices: vertex_stack,
            });
        }
        vertex_stack.pop();
    }
    None
}

pub fn has_berge_path(h: &UniformHypergraph, length: usize) -> bool {
    find_berge_path(h, length).is_some()
}

fn berge_rec(
    h: &UniformHypergraph,
    length: usize,
    used_vertices: u64,
    used_edges: &mut [bool],
    edge_stack: &mut Vec<usize>,
    vertex_stack: &mut Vec<usize>,
) -> bool {
    if edge_stack.len() == length {
        return true;
    }
    let cur = *vertex_stack.last().unwrap();
    for (ei, &e) in h.edges().iter().enumerate() {
        if used_edges[ei] || e & bit(cur) == 0 {
            continue;
        }
        used_edges[ei] = true;
        edge_stack.push(ei);
        for w in bits(e & !used_vertices) {
            vertex_stack.push(w);
            if berge_rec(
                h,
                length,
                used_vertices | bit(w),
                used_edges,
                edge_stack,
                vertex_stack,
            ) {
                return true;
            }
            vertex_stack.pop();
        }
        edge_stack.pop();
        used_edges[ei] = false;
    }
    false
}

/// Verdict of the finite Berge-freeness check on one host graph.
#[derive(Clone, Debug)]
pub enum BergeFreeVerdict {
    /// The host contains the broom, so the precondition fails.
    Inapplicable,
    /// H2 has no Berge path of length k + 1.
    Holds { h2_edges: usize },
    /// A Berge path exists; here is the broom embedding it forces. On a
    /// genuinely broom-free host this variant is unreachable.
    Violated {
        berge: BergePath,
        broom: BroomWitness,
    },
}

/// On a broom-free host, asserts that the r-sets with more than `ell + s`
/// common neighbors carry no Berge path of `k + 1` hyperedges. A found path
/// is converted into the broom embedding it implies, so a violation is
/// self-certifying.
pub fn check_berge_free(g: &Graph, r: u32, spec: &BroomSpec) -> Result<BergeFreeVerdict> {
    if contains_broom(g, spec) {
        return Ok(BergeFreeVerdict::Inapplicable);
    }
    let classification = classify_rsets(g, r, spec)?;
    let h2 = &classification.h2;
    match find_berge_path(h2, spec.k() as usize + 1) {
        None => Ok(BergeFreeVerdict::Holds {
            h2_edges: h2.edge_count(),
        }),
        Some(berge) => {
            let broom = broom_from_berge(g, spec, h2, &berge)?;
            Ok(BergeFreeVerdict::Violated { berge, broom })
        }
    }
}

/// Unwinds a Berge path of `k + 1` hyperedges in H2 into a broom embedding in
/// the host: pick a fresh common neighbor for each hyperedge, interleave to
/// get a long path whose first vertex has degree above `ell + s`, then bend
/// that endpoint into the broom's center.
pub fn broom_from_berge(
    g: &Graph,
    spec: &BroomSpec,
    h2: &UniformHypergraph,
    berge: &BergePath,
) -> Result<BroomWitness> {
    let ell = spec.ell() as usize;
    let s = spec.s() as usize;
    let mut used: u64 = berge.vertices.iter().fold(0, |m, &v| m | bit(v));

    // One private common neighbor per hyperedge. Each must dodge at most
    // 2k + 2 <= ell + s vertices while more than ell + s are available.
    let mut interleaved = Vec::with_capacity(berge.edges.len());
    for &ei in &berge.edges {
        let cn = common_neighborhood(g, h2.edges()[ei]);
        let avail = cn & !used;
        let u = bits(avail).next().ok_or_else(|| {
            Error::InvalidParameter("hyperedge common neighborhood too small for a witness".into())
        })?;
        used |= bit(u);
        interleaved.push(u);
    }

    // v1 u1 v2 u2 ... u_{k+1} v_{k+2}: a path on 2k + 3 >= ell - 1 vertices.
    let mut full = Vec::with_capacity(berge.vertices.len() + interleaved.len());
    for (i, &v) in berge.vertices.iter().enumerate() {
        full.push(v);
        if i < interleaved.len() {
            full.push(interleaved[i]);
        }
    }
    debug_assert!(full.windows(2).all(|e| g.has_edge(e[0], e[1])));
    debug_assert!(full.len() >= ell - 1);

    // The first ell - 1 vertices keep the heavy vertex v1 as an endpoint.
    let prefix = &full[..ell - 1];
    let heavy = prefix[0];
    let prefix_mask = prefix.iter().fold(0u64, |m, &v| m | bit(v));
    let mut avail = g.neighbors(heavy) & !prefix_mask;

    // Extend past the heavy endpoint so it becomes penultimate, then attach
    // the leaves. Degree above ell + s leaves at least s + 1 fresh neighbors.
    let extension = bits(avail)
        .next()
        .ok_or_else(|| Error::InvalidParameter("heavy endpoint has no fresh neighbor".into()))?;
    avail &= !bit(extension);
    let leaves: Vec<usize> = bits(avail).take(s).collect();
    if leaves.len() < s {
        return Err(Error::InvalidParameter(
            "heavy endpoint has too few fresh neighbors for the leaves".into(),
        ));
    }

    let mut path: Vec<usize> = prefix.iter().rev().copied().collect();
    path.push(extension);
    Ok(BroomWitness { path, leaves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{is_broom_free, verify_broom_witness};
    use crate::families::make_h;
    use crate::graph::Graph;
    use proptest::prelude::*;

    fn spec(ell: u32, s: u32) -> BroomSpec {
        BroomSpec::new(ell, s).unwrap()
    }

    #[test]
    fn classify_h_2_10() {
        // Pairs of H(2, 10) under B(6, 0), k = 2: the high-high pair has 8
        // common neighbors, low-low pairs exactly k, high-low pairs just 1.
        let g = make_h(2, 10).unwrap();
        let cls = classify_rsets(&g, 2, &spec(6, 0)).unwrap();
        assert_eq!(cls.sizes(), [1, 1, 28, 16]);
        let total: usize = [cls.sizes()[0], cls.sizes()[2], cls.sizes()[3]]
            .iter()
            .sum();
        assert_eq!(total, 45);
    }

    #[test]
    fn classify_empty_and_complete() {
        let empty = Graph::empty(5).unwrap();
        let cls = classify_rsets(&empty, 2, &spec(4, 0)).unwrap();
        assert_eq!(cls.sizes(), [0, 0, 0, 10]);

        let k5 = Graph::complete(5).unwrap();
        let cls = classify_rsets(&k5, 2, &spec(4, 0)).unwrap();
        assert_eq!(cls.sizes(), [10, 0, 0, 0]);
    }

    #[test]
    fn h2_is_inside_h1() {
        let g = make_h(3, 9).unwrap();
        let cls = classify_rsets(&g, 2, &spec(8, 0)).unwrap();
        for e in cls.h2.edges() {
            assert!(cls.h1.edges().contains(e));
        }
    }

    #[test]
    fn berge_path_examples() {
        // Three graph edges in a row form a Berge path of length 3.
        let h = UniformHypergraph::new(
            2,
            5,
            vec![bit(1) | bit(2), bit(2) | bit(3), bit(3) | bit(4)],
        )
        .unwrap();
        let found = find_berge_path(&h, 3).expect("the path itself");
        assert_eq!(found.vertices.len(), 4);
        assert!(!has_berge_path(&h, 4));

        // A single 3-edge supports length 1 but not 2.
        let single = UniformHypergraph::new(3, 4, vec![bit(1) | bit(2) | bit(3)]).unwrap();
        assert!(has_berge_path(&single, 1));
        assert!(!has_berge_path(&single, 2));
    }

    #[test]
    fn berge_witness_is_consistent() {
        let h = UniformHypergraph::new(
            3,
            6,
            vec![
                bit(0) | bit(1) | bit(2),
                bit(1) | bit(3) | bit(4),
                bit(3) | bit(5) | bit(0),
            ],
        )
        .unwrap();
        let path = find_berge_path(&h, 3).unwrap();
        assert_eq!(path.edges.len(), 3);
        assert_eq!(path.vertices.len(), 4);
        // Distinctness and containment, straight from the definition.
        let mut vs = path.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        assert_eq!(vs.len(), 4);
        for (i, &ei) in path.edges.iter().enumerate() {
            let e = h.edges()[ei];
            assert!(e & bit(path.vertices[i]) != 0);
            assert!(e & bit(path.vertices[i + 1]) != 0);
        }
    }

    #[test]
    fn h_graphs_hold_berge_free() {
        let g = make_h(2, 12).unwrap();
        let sp = spec(6, 0);
        let cls = classify_rsets(&g, 2, &sp).unwrap();
        assert_eq!(cls.h2.edge_count(), 1);
        match check_berge_free(&g, 2, &sp).unwrap() {
            BergeFreeVerdict::Holds { h2_edges } => assert_eq!(h2_edges, 1),
            other => panic!("expected Holds, got {other:?}"),
        }
    }

    #[test]
    fn broom_hosts_are_inapplicable() {
        let g = Graph::complete(8).unwrap();
        let sp = spec(4, 0);
        assert!(matches!(
            check_berge_free(&g, 2, &sp).unwrap(),
            BergeFreeVerdict::Inapplicable
        ));
    }

    #[test]
    fn berge_paths_in_heavy_hosts_unwind_to_brooms() {
        // K8 under B(4, 0): every pair has six common neighbors, so H2 is all
        // pairs and Berge paths abound; each must convert to a valid broom.
        let g = Graph::complete(8).unwrap();
        let sp = spec(4, 0);
        assert!(!is_broom_free(&g, &sp));
        let cls = classify_rsets(&g, 2, &sp).unwrap();
        let berge = find_berge_path(&cls.h2, sp.k() as usize + 1).unwrap();
        let broom = broom_from_berge(&g, &sp, &cls.h2, &berge).unwrap();
        assert!(verify_broom_witness(&g, &sp, &broom));
    }

    #[test]
    fn parameter_validation() {
        let g = Graph::empty(5).unwrap();
        assert!(classify_rsets(&g, 1, &spec(4, 0)).is_err());
        let big = Graph::empty(64).unwrap();
        assert!(matches!(
            classify_rsets(&big, 5, &spec(4, 0)),
            Err(Error::SizeLimit(_))
        ));
        assert!(UniformHypergraph::new(2, 4, vec![bit(0) | bit(1), bit(0) | bit(1)]).is_err());
        assert!(UniformHypergraph::new(2, 4, vec![bit(0) | bit(1) | bit(2)]).is_err());
    }

    proptest! {
        #[test]
        fn partition_identity(g in crate::graph::tests::arb_graph(8), r in 2u32..=3) {
            let sp = spec(5, 1);
            let cls = classify_rsets(&g, r, &sp).unwrap();
            let n = g.vertex_count() as u64;
            let expected = crate::graph::binomial(n, r as u64) as usize;
            let [h1, _, h3, h4] = cls.sizes();
            prop_assert_eq!(h1 + h3 + h4, expected);
        }
    }
}
