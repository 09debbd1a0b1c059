//! Exact vertex coloring: clique lower bound, DSATUR upper bound, then
//! backtracking k-colorability for each k in between.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors_used: usize,
    /// `colors[v]` in `0..colors_used`.
    pub colors: Vec<usize>,
}

fn saturation(g: &Graph, colors: &[Option<usize>], v: usize) -> usize {
    let mut seen = 0u64;
    for u in g.neighbors(v) {
        if let Some(c) = colors[u] {
            seen |= 1 << c;
        }
    }
    seen.count_ones() as usize
}

/// Uncolored vertex of maximum saturation, then maximum uncolored degree,
/// then smallest index.
fn next_vertex(g: &Graph, colors: &[Option<usize>], uncolored: VertexSet) -> usize {
    uncolored
        .iter()
        .max_by_key(|&v| {
            (
                saturation(g, colors, v),
                (g.neighbors(v) & uncolored).len(),
                std::cmp::Reverse(v),
            )
        })
        .expect("uncolored is nonempty")
}

fn dsatur(g: &Graph) -> Vec<usize> {
    let mut colors = vec![None; g.n()];
    let mut uncolored = g.vertices();
    while !uncolored.is_empty() {
        let v = next_vertex(g, &colors, uncolored);
        let c = (0..)
            .find(|&c| g.neighbors(v).iter().all(|u| colors[u] != Some(c)))
            .expect("some color is free");
        colors[v] = Some(c);
        uncolored.remove(v);
    }
    colors.into_iter().map(|c| c.expect("all colored")).collect()
}

fn try_color(g: &Graph, k: usize, colors: &mut [Option<usize>], uncolored: VertexSet, used: usize) -> bool {
    if uncolored.is_empty() {
        return true;
    }
    let v = next_vertex(g, colors, uncolored);
    // A fresh color is only tried once (colors are interchangeable).
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|u| colors[u] != Some(c)) {
            colors[v] = Some(c);
            if try_color(g, k, colors, uncolored.without(v), used.max(c + 1)) {
                return true;
            }
            colors[v] = None;
        }
    }
    false
}

/// A proper coloring with `χ(g)` colors.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    if g.n() == 0 {
        return Coloring {
            colors_used: 0,
            colors: Vec::new(),
        };
    }
    let clique = g.complement().independence_number_within(g.vertices());
    let upper = dsatur(g);
    let ub = upper.iter().max().map_or(0, |&c| c + 1);
    for k in clique..ub {
        let mut colors = vec![None; g.n()];
        if try_color(g, k, &mut colors, g.vertices(), 0) {
            return Coloring {
                colors_used: k,
                colors: colors.into_iter().map(|c| c.expect("all colored")).collect(),
            };
        }
    }
    Coloring {
        colors_used: ub,
        colors: upper,
    }
}
