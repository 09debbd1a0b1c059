#![allow(dead_code)]

use ei_core::{Graph, VertexSet};
use proptest::prelude::*;

/// Arbitrary graph on `lo..=hi` vertices, every pair present independently.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}
