//! Projective dimension, regularity and big height of `S/I(G)`.
//!
//! By Hochster's formula, `β_{i,W}(S/I(G)) = dim H̃_{|W|-i-1}(ind G[W])`, so
//!
//! ```text
//! pd(G)  = max { |W| - k - 1 : H̃_k(ind G[W]) ≠ 0 }
//! reg(G) = max { k + 1       : H̃_k(ind G[W]) ≠ 0 }
//! ```
//!
//! over all `W ⊆ V`. Subsets inducing an isolated vertex give cones and are
//! skipped; `W = ∅` contributes `β̃_{-1} = 1`, so edgeless graphs get
//! `pd = reg = 0`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination;
use crate::graph::Graph;
use crate::homology::{reduced_homology, HomologyError, Prime, DEFAULT_FACE_BUDGET};
use crate::vertex_set::VertexSet;

/// Above this many non-isolated vertices a warning is logged.
pub const SOFT_VERTEX_CAP: usize = 16;
/// Hard limit on non-isolated vertices: the table holds `2^n` entries.
pub const HARD_VERTEX_CAP: usize = 24;

const NONE: i8 = -1;
const CHUNK: usize = 1 << 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HochsterError {
    #[error("{n} non-isolated vertices exceed the hard cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// A subset `W` (original labels) and degree `k` with `H̃_k(ind G[W]) ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub w: VertexSet,
    pub k: isize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HochsterResult {
    pub p: Prime,
    pub pd: usize,
    pub reg: usize,
    pub bh: usize,
    pub pd_witness: Witness,
    pub reg_witness: Witness,
}

/// Per-subset Hochster contributions of one graph, with subset-maximum
/// lookups so that `pd` and `reg` of every induced subgraph are available.
///
/// Internally indexed by subsets of the non-isolated vertices, relabeled in
/// ascending order; public methods take and return original labels.
#[derive(Clone, Debug)]
pub struct HochsterTable {
    p: Prime,
    map: Vec<usize>,
    pd_c: Vec<i8>,
    reg_c: Vec<i8>,
    pd_max: Vec<i8>,
    reg_max: Vec<i8>,
}

fn contribution(h: &Graph, w: VertexSet, p: Prime, budget: usize) -> Result<(i8, i8), HomologyError> {
    if w.is_empty() {
        return Ok((0, 0));
    }
    if h.has_isolated_within(w) {
        return Ok((NONE, NONE));
    }
    let profile = reduced_homology(h, w, p, budget)?;
    let mut degrees = profile.nonzero_degrees();
    let Some(kmin) = degrees.next() else {
        return Ok((NONE, NONE));
    };
    let kmax = degrees.last().unwrap_or(kmin);
    Ok(((w.len() as isize - kmin - 1) as i8, (kmax + 1) as i8))
}

fn subset_max(values: &[i8], n: usize) -> Vec<i8> {
    let mut out = values.to_vec();
    for i in 0..n {
        let bit = 1usize << i;
        for mask in 0..out.len() {
            if mask & bit != 0 {
                out[mask] = out[mask].max(out[mask ^ bit]);
            }
        }
    }
    out
}

impl HochsterTable {
    pub fn build(g: &Graph, p: Prime) -> Result<Self, HochsterError> {
        Self::build_with_budget(g, p, DEFAULT_FACE_BUDGET)
    }

    pub fn build_with_budget(g: &Graph, p: Prime, budget: usize) -> Result<Self, HochsterError> {
        let (h, map) = g.strip_isolated();
        let n = h.n();
        if n > HARD_VERTEX_CAP {
            return Err(HochsterError::TooLarge { n, cap: HARD_VERTEX_CAP });
        }
        if n > SOFT_VERTEX_CAP {
            log::warn!("Hochster enumeration over 2^{n} subsets; this may be slow");
        }
        let size = 1usize << n;
        // Chunks run in parallel; results are concatenated in index order and
        // the first failing chunk (by index) decides the error, so the
        // schedule never changes the outcome.
        let chunks: Vec<Result<Vec<(i8, i8)>, HomologyError>> = (0..size.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| {
                (c * CHUNK..((c + 1) * CHUNK).min(size))
                    .map(|bits| contribution(&h, VertexSet::from_bits(bits as u64), p, budget))
                    .collect()
            })
            .collect();
        let mut pd_c = Vec::with_capacity(size);
        let mut reg_c = Vec::with_capacity(size);
        for chunk in chunks {
            for (a, b) in chunk.map_err(|e| relabel_error(e, &map))? {
                pd_c.push(a);
                reg_c.push(b);
            }
        }
        let pd_max = subset_max(&pd_c, n);
        let reg_max = subset_max(&reg_c, n);
        Ok(HochsterTable {
            p,
            map,
            pd_c,
            reg_c,
            pd_max,
            reg_max,
        })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    fn compress(&self, u: VertexSet) -> usize {
        self.map
            .iter()
            .enumerate()
            .filter(|&(_, &old)| u.contains(old))
            .fold(0, |acc, (new, _)| acc | 1 << new)
    }

    fn expand(&self, bits: usize) -> VertexSet {
        VertexSet::from_bits(bits as u64).iter().map(|v| self.map[v]).collect()
    }

    /// `pd(G[U])`.
    pub fn pd_within(&self, u: VertexSet) -> usize {
        self.pd_max[self.compress(u)].max(0) as usize
    }

    /// `reg(G[U])`.
    pub fn reg_within(&self, u: VertexSet) -> usize {
        self.reg_max[self.compress(u)].max(0) as usize
    }

    pub fn pd(&self) -> usize {
        self.pd_max[self.pd_max.len() - 1] as usize
    }

    pub fn reg(&self) -> usize {
        self.reg_max[self.reg_max.len() - 1] as usize
    }

    /// First subset, in order of size and then bit pattern, attaining `pd`.
    pub fn pd_witness(&self) -> Witness {
        let pd = self.pd() as i8;
        let bits = first_attaining(&self.pd_c, pd);
        let w = self.expand(bits);
        Witness {
            w,
            k: w.len() as isize - pd as isize - 1,
        }
    }

    pub fn reg_witness(&self) -> Witness {
        let reg = self.reg() as i8;
        let bits = first_attaining(&self.reg_c, reg);
        Witness {
            w: self.expand(bits),
            k: reg as isize - 1,
        }
    }
}

fn first_attaining(values: &[i8], target: i8) -> usize {
    let mut order: Vec<usize> = (0..values.len()).filter(|&i| values[i] == target).collect();
    order.sort_by_key(|&i| (i.count_ones(), i));
    order[0]
}

fn relabel_error(e: HomologyError, map: &[usize]) -> HochsterError {
    match e {
        HomologyError::FaceCountOverflow { support, budget } => {
            HomologyError::FaceCountOverflow {
                support: support.iter().map(|v| map[v]).collect(),
                budget,
            }
            .into()
        }
        other => other.into(),
    }
}

/// `pd`, `reg` and `bh` of `S/I(G)` over GF(p), with witnesses.
pub fn pd_reg(g: &Graph, p: Prime) -> Result<HochsterResult, HochsterError> {
    let table = HochsterTable::build(g, p)?;
    Ok(HochsterResult {
        p,
        pd: table.pd(),
        reg: table.reg(),
        bh: big_height(g),
        pd_witness: table.pd_witness(),
        reg_witness: table.reg_witness(),
    })
}

/// Largest minimal vertex cover. Minimal covers of `G` are complements of
/// maximal independent sets of `Ḡ`, so this is `|V(Ḡ)| - i(Ḡ)`.
pub fn big_height(g: &Graph) -> usize {
    let (h, _) = g.strip_isolated();
    h.n() - domination::idom(&h).value
}

/// Recomputes one homology group to confirm `H̃_k(ind G[W]) ≠ 0`.
pub fn verify_witness(g: &Graph, witness: Witness, p: Prime) -> Result<bool, HomologyError> {
    let profile = reduced_homology(g, witness.w, p, DEFAULT_FACE_BUDGET)?;
    Ok(profile.get(witness.k) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path};

    fn pd(g: &Graph) -> usize {
        pd_reg(g, Prime::TWO).unwrap().pd
    }

    #[test]
    fn small_examples() {
        let r = pd_reg(&complete(2), Prime::TWO).unwrap();
        assert_eq!((r.pd, r.reg, r.bh), (1, 1, 1));
        assert_eq!(pd(&cycle(4)), 3);
        assert_eq!(big_height(&cycle(4)), 2);
        assert_eq!(big_height(&path(4)), 2);
    }

    #[test]
    fn paths_and_cycles() {
        for n in 3..=12 {
            assert_eq!(pd(&path(n)), 2 * n / 3, "P_{n}");
            assert_eq!(pd(&cycle(n)), (2 * n - 1).div_ceil(3), "C_{n}");
        }
    }

    #[test]
    fn complete_and_complete_bipartite() {
        for d in 1..=4 {
            assert_eq!(pd(&complete_bipartite(d, d)), 2 * d - 1);
        }
        for n in 2..=8 {
            assert_eq!(pd(&complete(n)), n - 1);
        }
    }

    #[test]
    fn edgeless_and_isolated_vertices() {
        for n in 0..4 {
            let r = pd_reg(&Graph::empty(n).unwrap(), Prime::TWO).unwrap();
            assert_eq!((r.pd, r.reg, r.bh), (0, 0, 0));
            assert_eq!(r.pd_witness, Witness { w: VertexSet::EMPTY, k: -1 });
        }
        let g = Graph::from_edges(6, &[(1, 3), (3, 5), (5, 1)]).unwrap();
        let r = pd_reg(&g, Prime::TWO).unwrap();
        assert_eq!((r.pd, r.reg), (2, 1));
        assert!(r.pd_witness.w.is_subset(g.vertices() - g.isolated_vertices()));
    }

    #[test]
    fn witnesses_reverify() {
        for g in [cycle(5), path(7), complete_bipartite(2, 3)] {
            for p in [Prime::TWO, Prime::THREE] {
                let r = pd_reg(&g, p).unwrap();
                assert!(verify_witness(&g, r.pd_witness, p).unwrap());
                assert!(verify_witness(&g, r.reg_witness, p).unwrap());
                assert_eq!(r.pd_witness.w.len() as isize - r.pd_witness.k - 1, r.pd as isize);
                assert_eq!(r.reg_witness.k + 1, r.reg as isize);
            }
        }
    }

    #[test]
    fn induced_lookups_match_direct_computation() {
        let g = cycle(7);
        let table = HochsterTable::build(&g, Prime::TWO).unwrap();
        for x in 0..7 {
            assert_eq!(table.pd_within(g.vertices().without(x)), pd(&g.delete_vertex(x)));
            let rest = g.vertices() - g.closed_neighbors(x);
            assert_eq!(table.pd_within(rest), pd(&g.delete_star(x)));
        }
    }

    #[test]
    fn face_overflow_names_the_subset() {
        let g = complete_bipartite(3, 3);
        match HochsterTable::build_with_budget(&g, Prime::TWO, 5) {
            Err(HochsterError::Homology(HomologyError::FaceCountOverflow { support, budget })) => {
                assert_eq!(budget, 5);
                assert!(support.len() >= 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
