//! Independence complexes and their reduced homology over GF(p).

mod linalg;

pub use linalg::{rank_mod_p, SparseRow};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on the total number of faces (including the empty face).
pub const DEFAULT_FACE_BUDGET: usize = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("independence complex on {support} has more than {budget} faces")]
    FaceCountOverflow { support: VertexSet, budget: usize },
}

/// Characteristic of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);

    pub fn new(p: u64) -> Result<Self, HomologyError> {
        let ok = p >= 2 && p <= u32::MAX as u64 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if ok {
            Ok(Prime(p as u32))
        } else {
            Err(HomologyError::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Prime {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let p: u64 = s.trim().parse().map_err(|_| format!("'{s}' is not an integer"))?;
        Prime::new(p).map_err(|e| e.to_string())
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.0)
    }
}

impl<'de> Deserialize<'de> for Prime {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let p = u64::deserialize(deserializer)?;
        Prime::new(p).map_err(serde::de::Error::custom)
    }
}

/// The independence complex of `G[support]`.
///
/// `levels[k + 1]` lists the faces of dimension `k` (independent sets of size
/// `k + 1`) sorted by bit pattern; `levels[0]` is the empty face. Positions
/// in these lists index the columns of the boundary matrices.
#[derive(Clone, Debug)]
pub struct IndependenceComplex {
    support: VertexSet,
    levels: Vec<Vec<VertexSet>>,
}

impl IndependenceComplex {
    /// Complex of the whole graph with the default face budget.
    pub fn build(g: &Graph) -> Result<Self, HomologyError> {
        Self::build_on(g, g.vertices(), DEFAULT_FACE_BUDGET)
    }

    /// Complex of the induced subgraph `G[support]`, vertices keeping their
    /// labels in `g`.
    pub fn build_on(g: &Graph, support: VertexSet, budget: usize) -> Result<Self, HomologyError> {
        let mut levels: Vec<Vec<VertexSet>> = vec![vec![VertexSet::EMPTY]];
        let mut total = 1usize;
        // Each stack entry is a face together with the vertices that may still
        // extend it: larger than its maximum and not adjacent to any member.
        let mut stack = vec![(VertexSet::EMPTY, support)];
        while let Some((face, cand)) = stack.pop() {
            for v in cand {
                let bigger = face.with(v);
                total += 1;
                if total > budget {
                    return Err(HomologyError::FaceCountOverflow { support, budget });
                }
                let size = bigger.len();
                if levels.len() <= size {
                    levels.push(Vec::new());
                }
                levels[size].push(bigger);
                let above = cand - VertexSet::full(v + 1);
                let next = above - g.neighbors(v);
                if !next.is_empty() {
                    stack.push((bigger, next));
                }
            }
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        Ok(IndependenceComplex { support, levels })
    }

    pub fn support(&self) -> VertexSet {
        self.support
    }

    /// Dimension; `-1` for the complex whose only face is empty.
    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 2
    }

    /// Faces of dimension `k` (size `k + 1`); empty outside `-1..=dim`.
    pub fn faces(&self, k: isize) -> &[VertexSet] {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.levels.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// `f[k + 1]` = number of faces of dimension `k`, starting at `f_{-1} = 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn face_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Maximal faces, in order of dimension then bit pattern.
    pub fn facets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for (i, level) in self.levels.iter().enumerate() {
            let above = self.levels.get(i + 1);
            out.extend(level.iter().copied().filter(|&f| {
                above.is_none_or(|up| !up.iter().any(|&g| f.is_subset(g)))
            }));
        }
        out
    }

    fn index_in(&self, k: isize, face: VertexSet) -> u32 {
        self.faces(k)
            .binary_search(&face)
            .expect("complex is downward closed") as u32
    }

    /// Rows of the boundary map from dimension `k` to `k - 1`, one per
    /// `k`-face. Removing the `j`-th smallest vertex carries sign `(-1)^j`;
    /// `-1` is stored as `p - 1`.
    pub fn boundary_rows(&self, k: isize, p: Prime) -> Vec<SparseRow> {
        if k < 0 {
            return Vec::new();
        }
        let minus_one = p.get() - 1;
        self.faces(k)
            .iter()
            .map(|&face| {
                let mut row: SparseRow = face
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        let sign = if j % 2 == 0 { 1 } else { minus_one };
                        (self.index_in(k - 1, face.without(v)), sign)
                    })
                    .collect();
                row.sort_unstable_by_key(|&(c, _)| c);
                row
            })
            .collect()
    }

    /// `rank ∂_k` over GF(p); zero for `k < 0` or `k > dim`.
    pub fn boundary_rank(&self, k: isize, p: Prime) -> usize {
        if k < 0 || k > self.dim() {
            return 0;
        }
        rank_mod_p(&self.boundary_rows(k, p), self.faces(k - 1).len(), p)
    }
}

/// Reduced Betti numbers `β̃_k` of one complex over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub p: Prime,
    /// `betti[k + 1] = β̃_k` for `-1 <= k <= dim`.
    pub betti: Vec<u64>,
}

impl HomologyProfile {
    pub fn get(&self, k: isize) -> u64 {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.betti.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Degrees `k` with `β̃_k ≠ 0`, ascending.
    pub fn nonzero_degrees(&self) -> impl Iterator<Item = isize> + '_ {
        self.betti
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, _)| i as isize - 1)
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^k β̃_k` over `k >= -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// `β̃_k = f_k - rank ∂_k - rank ∂_{k+1}`.
pub fn betti_numbers(c: &IndependenceComplex, p: Prime) -> HomologyProfile {
    let f = c.f_vector();
    let ranks: Vec<usize> = (-1..=c.dim() + 1).map(|k| c.boundary_rank(k, p)).collect();
    let betti = f
        .iter()
        .enumerate()
        .map(|(i, &fk)| (fk - ranks[i] - ranks[i + 1]) as u64)
        .collect();
    HomologyProfile { p, betti }
}

/// Reduced homology of `ind(G[support])`; short-circuits to zero when the
/// induced subgraph has an isolated vertex.
pub fn reduced_homology(
    g: &Graph,
    support: VertexSet,
    p: Prime,
    budget: usize,
) -> Result<HomologyProfile, HomologyError> {
    if g.has_isolated_within(support) {
        return Ok(HomologyProfile {
            p,
            betti: vec![0; support.len() + 1],
        });
    }
    Ok(betti_numbers(&IndependenceComplex::build_on(g, support, budget)?, p))
}

/// True when `g` has an isolated vertex, which makes `ind(g)` a cone over
/// it and kills all reduced homology.
pub fn is_cone(g: &Graph) -> bool {
    !g.isolated_vertices().is_empty()
}
