//! The graph6 text format, single-byte length form (`1 <= n <= 62`).
//!
//! Layout: byte one is `n + 63`; then the upper triangle of the adjacency
//! matrix, read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian into 6-bit groups, zero-padded to a multiple of 6, with
//! 63 added to every group so all bytes land in the printable range 63..=126.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the single-byte length form can express.
pub const MAX_GRAPH6_VERTICES: usize = 62;

const OFFSET: u8 = 63;

/// Encodes a graph as a graph6 string.
pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::SizeLimit(format!(
            "graph6 single-byte form holds at most {MAX_GRAPH6_VERTICES} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + n * (n - 1) / 12 + 1);
    out.push(OFFSET + n as u8);

    let mut group: u8 = 0;
    let mut filled: u8 = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (group << (6 - filled)));
    }
    // All bytes are printable ASCII by construction.
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes a single graph6 line.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedInput("empty input".into()));
    }
    let n = match bytes[0] {
        126 => {
            return Err(Error::MalformedInput(
                "multi-byte length form is not supported".into(),
            ))
        }
        b @ 64..=125 => (b - OFFSET) as usize,
        b => {
            return Err(Error::MalformedInput(format!(
                "length byte {b} outside 64..=125"
            )))
        }
    };
    let nbits = n * (n - 1) / 2;
    let expect = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expect {
        return Err(Error::MalformedInput(format!(
            "need {expect} data bytes for n={n}, got {}",
            data.len()
        )));
    }

    let mut adj = vec![0u64; n];
    let mut cursor = 0usize;
    let read_bit = |cursor: usize| -> Result<bool> {
        let byte = data[cursor / 6];
        if !(OFFSET..=126).contains(&byte) {
            return Err(Error::MalformedInput(format!(
                "data byte {byte} outside 63..=126"
            )));
        }
        let group = byte - OFFSET;
        Ok(group & (1 << (5 - cursor % 6)) != 0)
    };
    for v in 1..n {
        for u in 0..v {
            if read_bit(cursor)? {
                adj[u] |= 1u64 << v;
                adj[v] |= 1u64 << u;
            }
            cursor += 1;
        }
    }
    // Padding bits must be zero.
    while cursor < expect * 6 {
        if read_bit(cursor)? {
            return Err(Error::MalformedInput("nonzero padding bits".into()));
        }
        cursor += 1;
    }
    // Also reject out-of-range bytes in fully-padded groups.
    for &b in data {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::MalformedInput(format!(
                "data byte {b} outside 63..=126"
            )));
        }
    }
    Graph::from_adjacency(adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    #[test]
    fn single_vertex_is_at_sign() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(graph6_encode(&g).unwrap(), "@");
        assert_eq!(graph6_decode("@").unwrap(), g);
    }

    #[test]
    fn known_small_strings() {
        // K3 per the format reference.
        assert_eq!(graph6_encode(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(graph6_decode("Bw").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn exhaustive_round_trip_up_to_six_vertices() {
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let text = graph6_encode(&g).unwrap();
                assert_eq!(graph6_decode(&text).unwrap(), g, "mask {mask}, n {n}");
            }
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            graph6_decode("garbage\x01"),
            Err(crate::error::Error::MalformedInput(_))
        ));
        assert!(graph6_decode("").is_err());
        assert!(graph6_decode("@@").is_err()); // trailing junk
        assert!(graph6_decode("B").is_err()); // short data
        assert!(graph6_decode("~??").is_err()); // multi-byte length form
        assert!(graph6_decode("\x20w").is_err()); // bad length byte
                                                  // n=2 with a padding bit set: data group 0b010000.
        let bad = String::from_utf8(vec![63 + 2, 63 + 0b010000]).unwrap();
        assert!(graph6_decode(&bad).is_err());
    }

    #[test]
    fn encode_rejects_oversized() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(
            graph6_encode(&g),
            Err(crate::error::Error::SizeLimit(_))
        ));
        assert!(graph6_encode(&Graph::complete(62).unwrap()).is_ok());
    }

    proptest! {
        #[test]
        fn round_trip(g in crate::graph::tests::arb_graph(16)) {
            let text = graph6_encode(&g).unwrap();
            prop_assert_eq!(graph6_decode(&text).unwrap(), g);
        }
    }

    #[test]
    fn round_trip_at_the_size_cap() {
        let g = Graph::complete(62).unwrap();
        assert_eq!(graph6_decode(&graph6_encode(&g).unwrap()).unwrap(), g);
    }
}
