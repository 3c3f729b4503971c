//! Immutable simple graphs on at most 64 vertices, one neighbor bitset per
//! vertex, with the two objective functions the searches maximize.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard vertex cap. One machine word per neighborhood makes common-neighbor
/// intersection a single AND plus popcount.
pub const MAX_VERTICES: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask as vertex indices.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Exact binomial coefficient. Intended for the desk-scale range `n <= 64`,
/// where every value fits comfortably in the u128 intermediates.
pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        // c * (n - k + i) is always divisible by i here.
        c = c * (n - k + i) as u128 / i as u128;
    }
    c
}

/// `base^exp` in checked u64 arithmetic.
pub(crate) fn checked_pow(base: u64, exp: u32, what: &'static str) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow(what))
}

/// An immutable simple graph on `1..=64` vertices.
///
/// `adj[v]` is the neighborhood of `v` as a bitset. Invariants, enforced by
/// every constructor: adjacency is symmetric, no vertex is its own neighbor,
/// and no bit at position `>= n` is set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an explicit edge list. Duplicate edges are fine,
    /// loops and out-of-range endpoints are not.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor bitsets, validating all invariants.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        let mask = low_bits(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidParameter(format!(
                    "adjacency row {v} has bits outside 0..{n}"
                )));
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidParameter(format!("loop at vertex {v}")));
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if (adj[u] >> v) & 1 != (adj[v] >> u) & 1 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric at ({u},{v})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let mask = low_bits(n);
        for v in 0..n {
            g.adj[v] = mask & !bit(v);
        }
        Ok(g)
    }

    /// The path on `n` vertices, `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.adj[v - 1] |= bit(v);
            g.adj[v] |= bit(v - 1);
        }
        Ok(g)
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::path(n)?;
        g.adj[0] |= bit(n - 1);
        g.adj[n - 1] |= bit(0);
        Ok(g)
    }

    /// The star on `n` vertices: center 0, leaves `1..n`.
    pub fn star(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.adj[0] |= bit(v);
            g.adj[v] = bit(0);
        }
        Ok(g)
    }

    #[inline(always)]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Neighborhood of `v` as a bitset.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degree sequence, sorted descending.
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut degs: Vec<u32> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Sum of the r-th powers of the degrees, exactly. `r >= 1`.
    pub fn e_r(&self, r: u32) -> Result<u64> {
        if r == 0 {
            return Err(Error::InvalidParameter("e_r requires r >= 1".into()));
        }
        let mut sum: u64 = 0;
        for v in 0..self.n {
            let term = checked_pow(self.degree(v) as u64, r, "e_r")?;
            sum = sum.checked_add(term).ok_or(Error::Overflow("e_r"))?;
        }
        Ok(sum)
    }

    /// Number of stars with `r` leaves, counted as unlabeled copies:
    /// the sum of `C(deg(v), r)` over all vertices. `r >= 2`.
    pub fn count_stars(&self, r: u32) -> Result<u64> {
        if r < 2 {
            return Err(Error::InvalidParameter(
                "count_stars requires r >= 2; the binomial identity only holds there".into(),
            ));
        }
        let mut sum: u128 = 0;
        for v in 0..self.n {
            sum += binomial(self.degree(v) as u64, r as u64);
        }
        u64::try_from(sum).map_err(|_| Error::Overflow("count_stars"))
    }

    /// New graph with one extra edge.
    pub fn with_edge_added(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidParameter(format!("bad edge ({u},{v})")));
        }
        let mut g = self.clone();
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
        Ok(g)
    }

    /// New graph with one edge removed. The edge must exist.
    pub fn with_edge_removed(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!(
                "edge ({u},{v}) not present"
            )));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// New graph with a fresh vertex `n` whose neighborhood is `mask`.
    pub fn with_appended_vertex(&self, mask: u64) -> Result<Self> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "cannot grow past {MAX_VERTICES} vertices"
            )));
        }
        if mask & !low_bits(self.n) != 0 {
            return Err(Error::InvalidParameter(
                "new neighborhood has bits outside the existing vertex set".into(),
            ));
        }
        let mut adj = self.adj.clone();
        for v in bits(mask) {
            adj[v] |= bit(self.n);
        }
        adj.push(mask);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// New graph with vertex `v` deleted; vertices above `v` shift down by one.
    pub fn with_vertex_deleted(&self, v: usize) -> Result<Self> {
        if self.n <= 1 {
            return Err(Error::InvalidParameter(
                "cannot delete the last vertex".into(),
            ));
        }
        if v >= self.n {
            return Err(Error::InvalidParameter(format!("no vertex {v}")));
        }
        let mut adj = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let row = self.adj[u] & !bit(v);
            let low = row & low_bits(v);
            let high = (row >> (v + 1)) << v;
            adj.push(low | high);
        }
        Ok(Graph { n: self.n - 1, adj })
    }

    /// Relabels: `order[i]` is the old vertex placed at new position `i`.
    pub fn relabeled(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.n {
            return Err(Error::InvalidParameter(
                "relabeling must list every vertex exactly once".into(),
            ));
        }
        let mut seen = 0u64;
        for &v in order {
            if v >= self.n || seen & bit(v) != 0 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= bit(v);
        }
        let mut adj = vec![0u64; self.n];
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(order[i], order[j]) {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn is_connected(&self) -> bool {
        let mut reach = bit(0);
        loop {
            let mut next = reach;
            for v in bits(reach) {
                next |= self.adj[v];
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        reach == low_bits(self.n)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The two quantities the extremal searches maximize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    /// Sum of r-th degree powers.
    Er,
    /// Number of stars with r leaves.
    Stars,
}

impl Objective {
    pub fn evaluate(self, g: &Graph, r: u32) -> Result<u64> {
        match self {
            Objective::Er => g.e_r(r),
            Objective::Stars => g.count_stars(r),
        }
    }

    /// Smallest r for which the objective is defined.
    pub fn min_r(self) -> u32 {
        match self {
            Objective::Er => 1,
            Objective::Stars => 2,
        }
    }
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Objective::Er => write!(f, "er"),
            Objective::Stars => write!(f, "stars"),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::families::make_h;
    use proptest::prelude::*;

    #[test]
    fn degree_sequence_examples() {
        assert_eq!(Graph::cycle(5).unwrap().degree_sequence(), vec![2; 5]);
        assert_eq!(
            Graph::star(5).unwrap().degree_sequence(),
            vec![4, 1, 1, 1, 1]
        );
        assert_eq!(
            make_h(2, 6).unwrap().degree_sequence(),
            vec![5, 5, 2, 2, 2, 2]
        );
    }

    #[test]
    fn e_r_examples() {
        assert_eq!(Graph::star(5).unwrap().e_r(2).unwrap(), 20);
        assert_eq!(make_h(2, 6).unwrap().e_r(2).unwrap(), 66);
        for r in 1..6 {
            assert_eq!(Graph::empty(4).unwrap().e_r(r).unwrap(), 0);
        }
        assert!(matches!(
            Graph::star(3).unwrap().e_r(0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn e_r_overflow_is_an_error() {
        // 64 * 63^10 exceeds u64; 64 * 63^9 still fits.
        let k64 = Graph::complete(64).unwrap();
        assert!(matches!(k64.e_r(10), Err(Error::Overflow(_))));
        assert_eq!(k64.e_r(9).unwrap(), 64 * 63u64.pow(9));
    }

    #[test]
    fn count_stars_examples() {
        assert_eq!(Graph::star(5).unwrap().count_stars(2).unwrap(), 6);
        assert_eq!(make_h(2, 6).unwrap().count_stars(2).unwrap(), 24);
        assert_eq!(Graph::complete(3).unwrap().count_stars(3).unwrap(), 0);
        assert!(matches!(
            Graph::star(5).unwrap().count_stars(1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_adjacency(vec![0b010, 0b000, 0b000]).is_err()); // asymmetric
        assert!(Graph::from_adjacency(vec![0b001, 0b000]).is_err()); // loop
    }

    #[test]
    fn edge_editing_round_trip() {
        let g = Graph::path(4).unwrap();
        let g2 = g.with_edge_added(0, 3).unwrap();
        assert_eq!(g2.edge_count(), 4);
        assert_eq!(g2.with_edge_removed(0, 3).unwrap(), g);
        assert!(g.with_edge_removed(0, 3).is_err());
    }

    #[test]
    fn vertex_deletion_shifts_labels() {
        let g = Graph::path(4).unwrap();
        let h = g.with_vertex_deleted(1).unwrap();
        // Remaining vertices 0, 2, 3 become 0, 1, 2 with the single edge 1-2.
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::from_edges(4, &[(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(63, 31), 916312070471295267);
    }

    prop_compose! {
        pub(crate) fn arb_graph(max_n: usize)
            (n in 1..=max_n)
            (n in Just(n), mask in proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))
            -> Graph
        {
            let mut edges = Vec::new();
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        }
    }

    proptest! {
        #[test]
        fn handshake(g in arb_graph(10)) {
            prop_assert_eq!(g.e_r(1).unwrap(), 2 * g.edge_count() as u64);
        }

        #[test]
        fn star_count_below_power_sum(g in arb_graph(10), r in 2u32..=4) {
            // r! * sum C(d, r) <= sum d^r, termwise.
            let factorial: u64 = (1..=r as u64).product();
            prop_assert!(factorial * g.count_stars(r).unwrap() <= g.e_r(r).unwrap());
        }
    }
}
