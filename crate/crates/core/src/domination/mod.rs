//! Exact domination parameters, chromatic number and `dim ind(G)`.
//!
//! | parameter | definition |
//! |-----------|------------|
//! | `γ`  | smallest `A` with `A ∪ N(A) = V` |
//! | `i`  | smallest independent dominating set |
//! | `γ₀(X)` | smallest `A` with `X ⊆ N(A)` (`A` may meet `X`) |
//! | `γ₀` | `γ₀(V)` |
//! | `τ`  | largest `γ₀(A)` over independent `A` |
//! | `ε`  | fewest edges whose endpoints' neighborhoods cover `V` |
//!
//! `γ₀`, `τ` and `ε` are undefined when some vertex has no neighbor; they
//! return [`Param::Infeasible`] naming the isolated vertices.

mod coloring;
mod mis;
mod setcover;

pub use coloring::{optimal_coloring, Coloring};
pub use mis::{for_each_maximal_independent_set, maximal_independent_sets};
pub use setcover::min_set_cover;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// An optimal vertex set and its size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub value: usize,
    pub witness: VertexSet,
}

impl Solution {
    fn of(witness: VertexSet) -> Self {
        Solution {
            value: witness.len(),
            witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSolution {
    pub value: usize,
    pub witness: Vec<(usize, usize)>,
}

/// `τ` together with the independent set attaining it and an optimal
/// `γ₀`-cover of that set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauSolution {
    pub value: usize,
    pub independent: VertexSet,
    pub cover: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Param<T> {
    Feasible(T),
    Infeasible { isolated: VertexSet },
}

impl<T> Param<T> {
    pub fn feasible(&self) -> Option<&T> {
        match self {
            Param::Feasible(t) => Some(t),
            Param::Infeasible { .. } => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Param<U> {
        match self {
            Param::Feasible(t) => Param::Feasible(f(t)),
            Param::Infeasible { isolated } => Param::Infeasible { isolated },
        }
    }
}

fn cover_solution(universe: VertexSet, sets: &[VertexSet]) -> Solution {
    let picked = min_set_cover(universe, sets).expect("caller checked feasibility");
    Solution::of(picked.into_iter().collect())
}

/// Domination number `γ`.
pub fn gamma(g: &Graph) -> Solution {
    let sets: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    cover_solution(g.vertices(), &sets)
}

/// Independent domination number `i`, by branch and bound: some vertex of
/// `N[u]` must join for every undominated `u`, and it must stay independent
/// of the vertices already chosen.
pub fn idom(g: &Graph) -> Solution {
    let mut best = greedy_independent_dominating(g);
    idom_branch(g, VertexSet::EMPTY, g.vertices(), &mut best);
    Solution::of(best)
}

fn greedy_independent_dominating(g: &Graph) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    let mut allowed = g.vertices();
    while let Some(v) = allowed
        .iter()
        .max_by_key(|&v| ((g.closed_neighbors(v) & allowed).len(), std::cmp::Reverse(v)))
    {
        chosen.insert(v);
        allowed -= g.closed_neighbors(v);
    }
    chosen
}

// `allowed` = vertices not yet dominated; exactly those may still be added.
fn idom_branch(g: &Graph, chosen: VertexSet, allowed: VertexSet, best: &mut VertexSet) {
    if allowed.is_empty() {
        if chosen.len() < best.len() {
            *best = chosen;
        }
        return;
    }
    let max_reach = allowed
        .iter()
        .map(|v| (g.closed_neighbors(v) & allowed).len())
        .max()
        .unwrap_or(1);
    if chosen.len() + allowed.len().div_ceil(max_reach) >= best.len() {
        return;
    }
    let u = allowed
        .iter()
        .min_by_key(|&u| ((g.closed_neighbors(u) & allowed).len(), u))
        .expect("allowed is nonempty");
    let mut options: Vec<usize> = (g.closed_neighbors(u) & allowed).to_vec();
    options.sort_by_key(|&v| (std::cmp::Reverse((g.closed_neighbors(v) & allowed).len()), v));
    for v in options {
        idom_branch(g, chosen.with(v), allowed - g.closed_neighbors(v), best);
    }
}

/// `γ₀(X, G)`.
pub fn gamma0_of(g: &Graph, x: VertexSet) -> Param<Solution> {
    let isolated = g.isolated_within(g.vertices()) & x;
    if !isolated.is_empty() {
        return Param::Infeasible { isolated };
    }
    let sets: Vec<VertexSet> = (0..g.n()).map(|a| g.neighbors(a) & x).collect();
    Param::Feasible(cover_solution(x, &sets))
}

/// `γ₀(G) = γ₀(V, G)`.
pub fn gamma0(g: &Graph) -> Param<Solution> {
    gamma0_of(g, g.vertices())
}

/// `τ`. `γ₀(·, G)` is monotone, so the maximum is attained on a maximal
/// independent set; `γ₀(A) ≤ |A|` prunes sets too small to improve.
pub fn tau(g: &Graph) -> Param<TauSolution> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Param::Infeasible { isolated };
    }
    let mut best = TauSolution {
        value: 0,
        independent: VertexSet::EMPTY,
        cover: VertexSet::EMPTY,
    };
    let mut first = true;
    for_each_maximal_independent_set(g, |a| {
        if first || a.len() > best.value {
            let sol = *gamma0_of(g, a).feasible().expect("no isolated vertices");
            if first || sol.value > best.value {
                best = TauSolution {
                    value: sol.value,
                    independent: a,
                    cover: sol.witness,
                };
            }
            first = false;
        }
        ControlFlow::Continue(())
    });
    Param::Feasible(best)
}

/// `ε`: set cover of `V` by `N(a) ∪ N(b)` over edges `(a, b)`.
pub fn epsilon(g: &Graph) -> Param<EdgeSolution> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Param::Infeasible { isolated };
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let sets: Vec<VertexSet> = edges
        .iter()
        .map(|&(a, b)| g.neighbors(a) | g.neighbors(b))
        .collect();
    let mut picked = min_set_cover(g.vertices(), &sets).expect("every vertex has a neighbor");
    picked.sort_unstable();
    Param::Feasible(EdgeSolution {
        value: picked.len(),
        witness: picked.into_iter().map(|i| edges[i]).collect(),
    })
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).colors_used
}

/// `dim ind(G)` = independence number − 1 (−1 for the null graph).
pub fn ind_dimension(g: &Graph) -> isize {
    g.independence_number_within(g.vertices()) as isize - 1
}

/// The five domination parameters of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationReport {
    pub gamma: Solution,
    pub idom: Solution,
    pub gamma0: Param<Solution>,
    pub tau: Param<TauSolution>,
    pub epsilon: Param<EdgeSolution>,
}

impl DominationReport {
    pub fn compute(g: &Graph) -> Self {
        DominationReport {
            gamma: gamma(g),
            idom: idom(g),
            gamma0: gamma0(g),
            tau: tau(g),
            epsilon: epsilon(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        complete, complete_bipartite, cycle, figure1_tree, path, pendant_path, pentagon_chain,
    };

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn feasible<T: Clone>(p: Param<T>) -> T {
        p.feasible().cloned().expect("feasible")
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&path(4)).value, 2);
        assert_eq!(gamma(&cycle(5)).value, 2);
        for n in 1..6 {
            assert_eq!(gamma(&complete(n)).value, 1);
        }
        assert_eq!(gamma(&Graph::empty(0).unwrap()).value, 0);
        assert_eq!(gamma(&Graph::empty(3).unwrap()).value, 3);
    }

    #[test]
    fn idom_examples() {
        for n in 1..=12 {
            assert_eq!(idom(&path(n)).value, n.div_ceil(3), "P_{n}");
        }
        assert_eq!(idom(&figure1_tree()).value, 3);
        assert_eq!(gamma(&figure1_tree()).value, 3);
        assert_eq!(idom(&complete_bipartite(2, 2)).value, 2);
        assert_eq!(idom(&cycle(4)).value, 2);
    }

    #[test]
    fn gamma0_examples() {
        assert_eq!(feasible(gamma0_of(&complete(2), set(&[0, 1]))).value, 2);
        let star = complete_bipartite(1, 3);
        assert_eq!(feasible(gamma0_of(&star, set(&[1, 2, 3]))).value, 1);
        assert_eq!(feasible(gamma0_of(&cycle(4), set(&[0, 2]))).value, 1);
        assert_eq!(feasible(gamma0(&complete(2))).value, 2);
        assert_eq!(feasible(gamma0(&cycle(4))).value, 2);
        assert_eq!(feasible(gamma0(&complete(3))).value, 2);
        assert_eq!(feasible(gamma0(&complete(4))).value, 2);
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(gamma0(&g), Param::Infeasible { isolated: set(&[2]) });
        assert_eq!(feasible(gamma0_of(&g, set(&[0]))).value, 1);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(feasible(tau(&cycle(5))).value, 1);
        assert_eq!(feasible(tau(&path(4))).value, 2);
        for n in 1..=3 {
            assert_eq!(feasible(tau(&pentagon_chain(n))).value, n);
        }
        for n in 1..=2 {
            assert!(feasible(tau(&pendant_path(n))).value >= 2 * n);
        }
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(feasible(epsilon(&cycle(5))).value, 2);
        assert_eq!(feasible(epsilon(&path(4))).value, 1);
        for n in 4..=12 {
            assert_eq!(feasible(epsilon(&path(n))).value, n.div_ceil(4), "P_{n}");
            assert_eq!(feasible(epsilon(&cycle(n))).value, n.div_ceil(4), "C_{n}");
        }
        for n in 1..=2 {
            assert_eq!(feasible(epsilon(&pendant_path(n))).value, n);
        }
        let e = feasible(epsilon(&cycle(8)));
        let covered = e
            .witness
            .iter()
            .fold(VertexSet::EMPTY, |acc, &(a, b)| acc | cycle(8).neighbors(a) | cycle(8).neighbors(b));
        assert_eq!(covered, VertexSet::full(8));
    }

    #[test]
    fn chromatic_and_dimension() {
        for d in 2..=4 {
            assert_eq!(chromatic_number(&complete_bipartite(d, d).complement()), d);
        }
        for n in 2..=6 {
            assert_eq!(chromatic_number(&complete(n).complement()), 1);
            assert_eq!(ind_dimension(&complete(n)), 0);
            assert_eq!(ind_dimension(&Graph::empty(n).unwrap()), n as isize - 1);
        }
        assert_eq!(chromatic_number(&cycle(5)), 3);
        assert_eq!(ind_dimension(&cycle(5)), 1);
        assert_eq!(ind_dimension(&Graph::empty(0).unwrap()), -1);
    }

    #[test]
    fn infeasible_with_isolated_vertices() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(tau(&g), Param::Infeasible { isolated: set(&[3]) });
        assert_eq!(epsilon(&g), Param::Infeasible { isolated: set(&[3]) });
    }
}
