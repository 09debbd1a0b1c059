//! Named graph families and file ingestion.
//!
//! Every graph that appears in the worked examples can be built by name from
//! a [`FamilySpec`]. Random families take an explicit seed and are
//! reproducible across runs and platforms (ChaCha8 stream).

mod edgelist;
mod graph6;

pub use edgelist::{parse_coordinates, parse_edgelist, write_edgelist};
pub use graph6::{parse_graph6, write_graph6};

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{l1_distance, Graph, GraphError};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: FamilyKind, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Edge probability `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probability {
    pub num: u32,
    pub den: u32,
}

impl Probability {
    pub const HALF: Probability = Probability { num: 1, den: 2 };

    pub fn new(num: u32, den: u32) -> Option<Self> {
        (den > 0 && num <= den).then_some(Probability { num, den })
    }

    fn sample<R: Rng>(self, rng: &mut R) -> bool {
        rng.gen_range(0..self.den) < self.num
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Probability {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (num, den) = s.split_once('/').unwrap_or((s, "1"));
        let num = num.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
        let den = den.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
        Probability::new(num, den).ok_or_else(|| format!("{s} is not a probability"))
    }
}

/// Family names as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    PentagonChain,
    PendantPath,
    Figure1Tree,
    Lattice,
    RandomGnp,
    RandomChordal,
    RandomLong,
    RandomLattice,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::PentagonChain,
        FamilyKind::PendantPath,
        FamilyKind::Figure1Tree,
        FamilyKind::Lattice,
        FamilyKind::RandomGnp,
        FamilyKind::RandomChordal,
        FamilyKind::RandomLong,
        FamilyKind::RandomLattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete-bipartite",
            FamilyKind::PentagonChain => "pentagon-chain",
            FamilyKind::PendantPath => "pendant-path",
            FamilyKind::Figure1Tree => "figure1-tree",
            FamilyKind::Lattice => "lattice",
            FamilyKind::RandomGnp => "random-gnp",
            FamilyKind::RandomChordal => "random-chordal",
            FamilyKind::RandomLong => "random-long",
            FamilyKind::RandomLattice => "random-lattice",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = FamilyKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown family '{s}' (expected one of: {})", names.join(", "))
            })
    }
}

/// A fully parameterized family member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// P_n.
    Path { n: usize },
    /// C_n, n ≥ 3.
    Cycle { n: usize },
    /// K_n.
    Complete { n: usize },
    /// K_{m,n}; the first `m` vertices form one side.
    CompleteBipartite { m: usize, n: usize },
    /// Q_n: `n` pentagons in series.
    PentagonChain { n: usize },
    /// T_n: a path on 4n vertices with n pendant vertices.
    PendantPath { n: usize },
    /// Frozen tree with i = γ = 3 that is not long.
    Figure1Tree,
    /// Unit-distance graph induced on explicit lattice points.
    Lattice { coords: Vec<Vec<i64>> },
    RandomGnp { n: usize, p: Probability, seed: u64 },
    /// Chordal by construction (random perfect elimination ordering).
    RandomChordal { n: usize, seed: u64 },
    /// G(n, p) with every edge between two vertices of degree > 2 subdivided.
    RandomLong { n: usize, p: Probability, seed: u64 },
    /// `count` distinct random points of the box `[0, side)^dim`.
    RandomLattice { dim: usize, side: i64, count: usize, seed: u64 },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            FamilySpec::PentagonChain { .. } => FamilyKind::PentagonChain,
            FamilySpec::PendantPath { .. } => FamilyKind::PendantPath,
            FamilySpec::Figure1Tree => FamilyKind::Figure1Tree,
            FamilySpec::Lattice { .. } => FamilyKind::Lattice,
            FamilySpec::RandomGnp { .. } => FamilyKind::RandomGnp,
            FamilySpec::RandomChordal { .. } => FamilyKind::RandomChordal,
            FamilySpec::RandomLong { .. } => FamilyKind::RandomLong,
            FamilySpec::RandomLattice { .. } => FamilyKind::RandomLattice,
        }
    }

    /// Short human-readable label, e.g. `cycle(n=5)`.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::PentagonChain { n }
            | FamilySpec::PendantPath { n } => format!("{}(n={n})", self.kind()),
            FamilySpec::CompleteBipartite { m, n } => format!("{}(m={m},n={n})", self.kind()),
            FamilySpec::Figure1Tree => self.kind().to_string(),
            FamilySpec::Lattice { coords } => format!("{}(points={})", self.kind(), coords.len()),
            FamilySpec::RandomGnp { n, p, seed } | FamilySpec::RandomLong { n, p, seed } => {
                format!("{}(n={n},p={p},seed={seed})", self.kind())
            }
            FamilySpec::RandomChordal { n, seed } => format!("{}(n={n},seed={seed})", self.kind()),
            FamilySpec::RandomLattice {
                dim,
                side,
                count,
                seed,
            } => format!(
                "{}(dim={dim},side={side},count={count},seed={seed})",
                self.kind()
            ),
        }
    }
}

fn invalid(kind: FamilyKind, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParams {
        family: kind,
        reason: reason.into(),
    }
}

fn check_cap(kind: FamilyKind, n: usize) -> Result<(), FamilyError> {
    if n > MAX_VERTICES {
        Err(invalid(kind, format!("{n} vertices exceed the cap of {MAX_VERTICES}")))
    } else {
        Ok(())
    }
}

/// Builds the graph described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let kind = spec.kind();
    match *spec {
        FamilySpec::Path { n } => {
            if n == 0 {
                return Err(invalid(kind, "n must be at least 1"));
            }
            check_cap(kind, n)?;
            Ok(path(n))
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(invalid(kind, "n must be at least 3"));
            }
            check_cap(kind, n)?;
            Ok(cycle(n))
        }
        FamilySpec::Complete { n } => {
            if n == 0 {
                return Err(invalid(kind, "n must be at least 1"));
            }
            check_cap(kind, n)?;
            Ok(complete(n))
        }
        FamilySpec::CompleteBipartite { m, n } => {
            if m == 0 || n == 0 {
                return Err(invalid(kind, "both sides must be nonempty"));
            }
            check_cap(kind, m + n)?;
            Ok(complete_bipartite(m, n))
        }
        FamilySpec::PentagonChain { n } => {
            if n == 0 {
                return Err(invalid(kind, "n must be at least 1"));
            }
            check_cap(kind, 5 * n)?;
            Ok(pentagon_chain(n))
        }
        FamilySpec::PendantPath { n } => {
            if n == 0 {
                return Err(invalid(kind, "n must be at least 1"));
            }
            check_cap(kind, 5 * n)?;
            Ok(pendant_path(n))
        }
        FamilySpec::Figure1Tree => Ok(figure1_tree()),
        FamilySpec::Lattice { ref coords } => lattice_subgraph(coords.clone()),
        FamilySpec::RandomGnp { n, p, seed } => {
            check_cap(kind, n)?;
            Ok(random_gnp(n, p, seed))
        }
        FamilySpec::RandomChordal { n, seed } => {
            if n == 0 {
                return Err(invalid(kind, "n must be at least 1"));
            }
            check_cap(kind, n)?;
            Ok(random_chordal(n, seed))
        }
        FamilySpec::RandomLong { n, p, seed } => {
            check_cap(kind, n)?;
            subdivide_heavy_edges(&random_gnp(n, p, seed))
                .map_err(|_| invalid(kind, "subdivided graph exceeds the vertex cap"))
        }
        FamilySpec::RandomLattice {
            dim,
            side,
            count,
            seed,
        } => {
            if dim == 0 || side <= 0 {
                return Err(invalid(kind, "dim and side must be positive"));
            }
            let cells = (side as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
            if (count as u128) > cells {
                return Err(invalid(kind, format!("cannot place {count} points in {cells} cells")));
            }
            check_cap(kind, count)?;
            lattice_subgraph(random_lattice_points(dim, side, count, seed))
        }
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path within cap")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle within cap")
}

pub fn complete(n: usize) -> Graph {
    Graph::empty(n).expect("complete graph within cap").complement()
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(m + n, &edges).expect("K_(m,n) within cap")
}

/// Q_n. Pentagon `i` occupies vertices `5i..5i+4` in cyclic order; the
/// connector joins vertex 2 of pentagon `i` to vertex 0 of pentagon `i+1`.
pub fn pentagon_chain(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(6 * n);
    for i in 0..n {
        let base = 5 * i;
        edges.extend((0..5).map(|j| (base + j, base + (j + 1) % 5)));
        if i + 1 < n {
            edges.push((base + 2, base + 5));
        }
    }
    Graph::from_edges(5 * n, &edges).expect("pentagon chain within cap")
}

/// T_n. Path vertices `0..4n` in order; pendant vertex `4n + i` hangs off the
/// second vertex (`4i + 1`) of the i-th block of four.
pub fn pendant_path(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..4 * n).map(|i| (i - 1, i)).collect();
    edges.extend((0..n).map(|i| (4 * i + 1, 4 * n + i)));
    Graph::from_edges(5 * n, &edges).expect("pendant path within cap")
}

/// Two adjacent centres 0 and 1; leaves 2, 3 on centre 0, leaf 4 on centre 1,
/// and a pendant path 1-5-6. The smallest tree with i = γ = 3 that is not long.
pub const FIGURE1_TREE_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (5, 6)];

pub fn figure1_tree() -> Graph {
    Graph::from_edges(7, &FIGURE1_TREE_EDGES).expect("static tree")
}

/// Induces the unit-distance graph on the given lattice points.
pub fn lattice_subgraph(coords: Vec<Vec<i64>>) -> Result<Graph, FamilyError> {
    let kind = FamilyKind::Lattice;
    check_cap(kind, coords.len())?;
    if let Some(dim) = coords.first().map(Vec::len) {
        if dim == 0 || coords.iter().any(|c| c.len() != dim) {
            return Err(invalid(kind, "all points need the same positive dimension"));
        }
    }
    for i in 0..coords.len() {
        if coords[..i].contains(&coords[i]) {
            return Err(invalid(kind, format!("duplicate point {:?}", coords[i])));
        }
    }
    let n = coords.len();
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if l1_distance(&coords[u], &coords[v]) == 1 {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g.with_coords(coords)?)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi G(n, p); pairs are sampled in lexicographic order.
pub fn random_gnp(n: usize, p: Probability, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let mut g = Graph::empty(n).expect("caller checked cap");
    for u in 0..n {
        for v in u + 1..n {
            if p.sample(&mut rng) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Each new vertex is joined to a random subset of a random clique already
/// recorded; the reverse insertion order is a perfect elimination ordering.
pub fn random_chordal(n: usize, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let mut g = Graph::empty(n).expect("caller checked cap");
    let mut cliques = vec![VertexSet::singleton(0)];
    for v in 1..n {
        let clique = cliques[rng.gen_range(0..cliques.len())];
        let chosen: VertexSet = clique.iter().filter(|_| rng.gen_bool(0.5)).collect();
        for u in chosen {
            g.add_edge(u, v).expect("in range");
        }
        cliques.push(chosen.with(v));
    }
    g
}

/// Subdivides every edge whose endpoints both have degree > 2. New vertices
/// are appended in lexicographic order of the edges they split. The result
/// is always long.
pub fn subdivide_heavy_edges(g: &Graph) -> Result<Graph, GraphError> {
    let heavy = |v: usize| g.degree(v) > 2;
    let split: Vec<_> = g.edges().filter(|&(u, v)| heavy(u) && heavy(v)).collect();
    let n = g.n() + split.len();
    let mut out = Graph::empty(n)?;
    let mut next = g.n();
    for (u, v) in g.edges() {
        if heavy(u) && heavy(v) {
            out.add_edge(u, next)?;
            out.add_edge(next, v)?;
            next += 1;
        } else {
            out.add_edge(u, v)?;
        }
    }
    Ok(out)
}

fn random_lattice_points(dim: usize, side: i64, count: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = rng_for(seed);
    let cells = (side as usize).pow(dim as u32);
    let mut picked = sample(&mut rng, cells, count).into_vec();
    picked.sort_unstable();
    picked
        .into_iter()
        .map(|mut idx| {
            let mut point = vec![0i64; dim];
            for c in point.iter_mut().rev() {
                *c = (idx % side as usize) as i64;
                idx /= side as usize;
            }
            point
        })
        .collect()
}
