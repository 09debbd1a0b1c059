//! Exact edge-ideal invariants of small graphs.
//!
//! Projective dimension and regularity of `S/I(G)` are computed through
//! Hochster's formula from the reduced homology of independence complexes
//! of induced subgraphs over `GF(p)`. Alongside them the crate computes
//! domination parameters, chromatic number and independence-complex
//! dimension exactly, and checks a catalogue of known bounds against the
//! computed values.

pub mod bounds;
pub mod domination;
pub mod families;
pub mod graph;
pub mod hochster;
pub mod homology;
pub mod report;
pub mod suite;
pub mod vertex_set;

pub use graph::{Graph, GraphError};
pub use vertex_set::{VertexSet, MAX_VERTICES};

/// Exact rational arithmetic for bound values.
pub type Rational = num_rational::Ratio<i64>;
