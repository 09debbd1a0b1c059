//! Maximal independent sets by Bron–Kerbosch on the complement.
//!
//! Independent sets of `G` are cliques of the complement, whose neighborhood
//! of `v` is `V \ N[v]`. Tomita pivoting keeps the number of recursive calls
//! within the Moon–Moser bound.

use std::ops::ControlFlow;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Calls `visit` on every maximal independent set of `g`, in a fixed order.
/// The visitor may stop the enumeration early.
pub fn for_each_maximal_independent_set<F>(g: &Graph, mut visit: F)
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let all = g.vertices();
    let non_nbrs: Vec<VertexSet> = (0..g.n()).map(|v| all - g.closed_neighbors(v)).collect();
    let _ = expand(&non_nbrs, VertexSet::EMPTY, all, VertexSet::EMPTY, &mut visit);
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, |s| {
        out.push(s);
        ControlFlow::Continue(())
    });
    out
}

fn expand<F>(
    non_nbrs: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    if p.is_empty() {
        return if x.is_empty() { visit(r) } else { ControlFlow::Continue(()) };
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| ((p & non_nbrs[u]).len(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in p - non_nbrs[pivot] {
        expand(non_nbrs, r.with(v), p & non_nbrs[v], x & non_nbrs[v], visit)?;
        p.remove(v);
        x.insert(v);
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    #[test]
    fn counts_on_small_graphs() {
        assert_eq!(maximal_independent_sets(&complete(4)).len(), 4);
        assert_eq!(maximal_independent_sets(&cycle(5)).len(), 5);
        assert_eq!(maximal_independent_sets(&path(4)).len(), 3);
        assert_eq!(maximal_independent_sets(&Graph::empty(3).unwrap()), vec![VertexSet::full(3)]);
        assert_eq!(maximal_independent_sets(&Graph::empty(0).unwrap()), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn every_result_is_maximal_and_independent() {
        let g = cycle(9);
        for s in maximal_independent_sets(&g) {
            assert!(g.is_independent(s));
            assert!(g.neighborhood_of(s) | s == g.vertices());
        }
    }

    #[test]
    fn early_stop() {
        let mut seen = 0;
        for_each_maximal_independent_set(&cycle(9), |_| {
            seen += 1;
            if seen == 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(seen, 2);
    }
}
