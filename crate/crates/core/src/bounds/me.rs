//! Certificates for the inductive bound `pd(G) ≤ |V(G)| − f(G)`.
//!
//! For a potential `f`, a certificate at `G` is a nonempty vertex sequence
//! `v_1, …, v_k` with `G_i = G − v_1 − … − v_i` such that
//!
//! * (2) `f(G_i − st_{G_i} v_{i+1}) + 1 ≥ f(G)` for `0 ≤ i < k`, and
//! * (3) `f(Ḡ_k) + |is(G_k)| ≥ f(G)`.
//!
//! If every induced subgraph with an edge has a certificate and
//! `f(H) ≤ |V(H)|` for edgeless `H`, the bound holds for `G`.
//! [`certify_class`] checks exactly that closure.

use std::collections::{HashMap, HashSet};

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::num::ExtNum;
use crate::domination;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::Rational;

pub const DEFAULT_DEPTH_CAP: usize = 6;
/// Largest graph for which the class closure (all `2^n` induced subgraphs)
/// is checked.
pub const CLASS_CHECK_MAX_VERTICES: usize = 14;

/// A candidate potential function.
pub trait MeFunction: Send + Sync {
    fn id(&self) -> &'static str;

    /// Fixes any class-level parameters from `root` and returns `f` on
    /// graphs of the class (induced subgraphs of `root`).
    fn bind<'a>(&'a self, root: &Graph) -> Box<dyn Fn(&Graph) -> Rational + 'a>;

    /// Try "a vertex with a neighbor, then its neighbors in order" before
    /// the general search.
    fn canonical_first(&self) -> bool {
        false
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}

/// `ε(H̄) + |is(H)|`, which equals `ε(H)` when `H` has no isolated vertex.
pub struct EpsilonFn;

impl MeFunction for EpsilonFn {
    fn id(&self) -> &'static str {
        "epsilon"
    }

    fn bind<'a>(&'a self, _root: &Graph) -> Box<dyn Fn(&Graph) -> Rational + 'a> {
        Box::new(|h| {
            let (core, _) = h.strip_isolated();
            let eps = domination::epsilon(&core).feasible().expect("stripped").value;
            int(eps + h.isolated_vertices().len())
        })
    }

    fn canonical_first(&self) -> bool {
        true
    }
}

pub struct GammaFn;

impl MeFunction for GammaFn {
    fn id(&self) -> &'static str {
        "gamma"
    }

    fn bind<'a>(&'a self, _root: &Graph) -> Box<dyn Fn(&Graph) -> Rational + 'a> {
        Box::new(|h| int(domination::gamma(h).value))
    }
}

pub struct IdomFn;

impl MeFunction for IdomFn {
    fn id(&self) -> &'static str {
        "idom"
    }

    fn bind<'a>(&'a self, _root: &Graph) -> Box<dyn Fn(&Graph) -> Rational + 'a> {
        Box::new(|h| int(domination::idom(h).value))
    }
}

/// `|V(H)| / h(H)` with `h = d + ((m−1)/m)·e + 1` from a `((m−1)/m)`-max
/// edge, `m` the least value making the root `K_{1,m+1}`-free, and `h = 1`
/// on edgeless graphs.
pub struct NOverH;

impl NOverH {
    pub fn class_m(root: &Graph) -> usize {
        (1..).find(|&m| root.is_k1m_free(m + 1)).expect("degree bounds m")
    }
}

impl MeFunction for NOverH {
    fn id(&self) -> &'static str {
        "n_over_h"
    }

    fn bind<'a>(&'a self, root: &Graph) -> Box<dyn Fn(&Graph) -> Rational + 'a> {
        let m = Self::class_m(root) as i64;
        let alpha = Rational::new(m - 1, m);
        Box::new(move |h| {
            let hv = match h.alpha_max_edge(alpha) {
                Ok(edge) => int(edge.d) + alpha * int(edge.e) + Rational::one(),
                Err(_) => Rational::one(),
            };
            int(h.n()) / hv
        })
    }
}

/// Named potentials.
pub struct MeRegistry {
    functions: Vec<Box<dyn MeFunction>>,
}

impl MeRegistry {
    pub fn standard() -> Self {
        MeRegistry {
            functions: vec![Box::new(EpsilonFn), Box::new(GammaFn), Box::new(IdomFn), Box::new(NOverH)],
        }
    }

    pub fn get(&self, id: &str) -> Option<&dyn MeFunction> {
        self.functions.iter().find(|f| f.id() == id).map(|f| f.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn MeFunction> {
        self.functions.iter().map(|f| f.as_ref())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.functions.iter().map(|f| f.id()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeCertificate {
    pub f_id: String,
    /// `f(G)`.
    pub f_value: ExtNum,
    pub sequence: Vec<usize>,
    /// `f(G_i − st v_{i+1})` for `i = 0..k`.
    pub step_values: Vec<ExtNum>,
    /// `f(Ḡ_k)`.
    pub final_value: ExtNum,
    /// `|is(G_k)|`.
    pub final_isolated: usize,
}

impl MeCertificate {
    /// The bound `|V(G)| − f(G)` this certificate contributes.
    pub fn implied_bound(&self, n: usize) -> ExtNum {
        match self.f_value {
            ExtNum::Int(v) => ExtNum::Int(n as i64 - v),
            ExtNum::Rational(r) => ExtNum::rational(int(n) - r),
            other => other,
        }
    }
}

/// `f` on induced subgraphs of a fixed root, memoized by vertex set.
struct Evaluator<'a> {
    root: &'a Graph,
    f: Box<dyn Fn(&Graph) -> Rational + 'a>,
    memo: HashMap<VertexSet, Rational>,
}

impl<'a> Evaluator<'a> {
    fn new(root: &'a Graph, f: &'a dyn MeFunction) -> Self {
        Evaluator {
            root,
            f: f.bind(root),
            memo: HashMap::new(),
        }
    }

    fn value(&mut self, u: VertexSet) -> Rational {
        if let Some(&v) = self.memo.get(&u) {
            return v;
        }
        let v = (self.f)(&self.root.induced_subgraph(u).0);
        self.memo.insert(u, v);
        v
    }

    /// `f(H − st_H v)` where `H = G[u]`.
    fn star_value(&mut self, u: VertexSet, v: usize) -> Rational {
        self.value(u - self.root.closed_neighbors(v))
    }

    /// `(f(H̄), |is(H)|)` where `H = G[u]`.
    fn final_terms(&mut self, u: VertexSet) -> (Rational, usize) {
        let isolated = self.root.isolated_within(u);
        (self.value(u - isolated), isolated.len())
    }
}

struct Search<'e, 'a> {
    ev: &'e mut Evaluator<'a>,
    target: Rational,
    depth_cap: usize,
    visited: HashSet<VertexSet>,
}

impl Search<'_, '_> {
    fn cond2(&mut self, current: VertexSet, v: usize) -> bool {
        self.ev.star_value(current, v) + Rational::one() >= self.target
    }

    fn cond3(&mut self, current: VertexSet) -> bool {
        let (bar, iso) = self.ev.final_terms(current);
        bar + int(iso) >= self.target
    }

    fn dfs(&mut self, current: VertexSet, seq: &mut Vec<usize>) -> bool {
        if !seq.is_empty() && self.cond3(current) {
            return true;
        }
        if seq.len() == self.depth_cap {
            return false;
        }
        for v in current {
            let next = current.without(v);
            if self.visited.contains(&next) || !self.cond2(current, v) {
                continue;
            }
            self.visited.insert(next);
            seq.push(v);
            if self.dfs(next, seq) {
                return true;
            }
            seq.pop();
        }
        false
    }
}

fn canonical_sequence(g: &Graph, u: VertexSet) -> Option<Vec<usize>> {
    u.iter()
        .find(|&v| g.neighbors(v).intersects(u))
        .map(|v| (g.neighbors(v) & u).to_vec())
}

/// Checks conditions (2) and (3) for `seq` inside `G[u]`.
fn sequence_works(ev: &mut Evaluator, u: VertexSet, target: Rational, seq: &[usize]) -> bool {
    let mut current = u;
    for &v in seq {
        if !current.contains(v) || ev.star_value(current, v) + Rational::one() < target {
            return false;
        }
        current.remove(v);
    }
    let (bar, iso) = ev.final_terms(current);
    !seq.is_empty() && bar + int(iso) >= target
}

fn find_sequence(
    ev: &mut Evaluator,
    u: VertexSet,
    depth_cap: usize,
    canonical: bool,
) -> Option<Vec<usize>> {
    let target = ev.value(u);
    if canonical {
        if let Some(seq) = canonical_sequence(ev.root, u) {
            if sequence_works(ev, u, target, &seq) {
                return Some(seq);
            }
        }
    }
    let mut search = Search {
        ev,
        target,
        depth_cap,
        visited: HashSet::new(),
    };
    let mut seq = Vec::new();
    search.dfs(u, &mut seq).then_some(seq)
}

fn certificate(ev: &mut Evaluator, f_id: &str, u: VertexSet, seq: Vec<usize>) -> MeCertificate {
    let f_value = ev.value(u);
    let mut current = u;
    let mut step_values = Vec::with_capacity(seq.len());
    for &v in &seq {
        step_values.push(ExtNum::rational(ev.star_value(current, v)));
        current.remove(v);
    }
    let (bar, iso) = ev.final_terms(current);
    MeCertificate {
        f_id: f_id.to_string(),
        f_value: ExtNum::rational(f_value),
        sequence: seq,
        step_values,
        final_value: ExtNum::rational(bar),
        final_isolated: iso,
    }
}

/// First certificate for `f` at `g` in deterministic search order, or
/// `None` (always for edgeless graphs).
pub fn search_me_certificate(g: &Graph, f: &dyn MeFunction, depth_cap: usize) -> Option<MeCertificate> {
    if g.edge_count() == 0 {
        return None;
    }
    let mut ev = Evaluator::new(g, f);
    let u = g.vertices();
    let seq = find_sequence(&mut ev, u, depth_cap, f.canonical_first())?;
    Some(certificate(&mut ev, f.id(), u, seq))
}

/// Recomputes every value recorded in `cert` and re-checks conditions (2)
/// and (3).
pub fn replay(g: &Graph, cert: &MeCertificate, f: &dyn MeFunction) -> Result<(), String> {
    if cert.f_id != f.id() {
        return Err(format!("certificate is for '{}', not '{}'", cert.f_id, f.id()));
    }
    if cert.sequence.is_empty() {
        return Err("empty sequence".into());
    }
    let mut ev = Evaluator::new(g, f);
    let u = g.vertices();
    let target = ev.value(u);
    if ExtNum::rational(target) != cert.f_value {
        return Err(format!("f(G) = {}, certificate says {}", ExtNum::rational(target), cert.f_value));
    }
    if cert.step_values.len() != cert.sequence.len() {
        return Err("one step value per vertex expected".into());
    }
    let mut current = u;
    for (i, (&v, &recorded)) in cert.sequence.iter().zip(&cert.step_values).enumerate() {
        if !current.contains(v) {
            return Err(format!("step {i}: vertex {v} is not in G_{i}"));
        }
        let value = ev.star_value(current, v);
        if ExtNum::rational(value) != recorded {
            return Err(format!("step {i}: recomputed {} vs recorded {recorded}", ExtNum::rational(value)));
        }
        if value + Rational::one() < target {
            return Err(format!("step {i}: condition (2) fails"));
        }
        current.remove(v);
    }
    let (bar, iso) = ev.final_terms(current);
    if ExtNum::rational(bar) != cert.final_value || iso != cert.final_isolated {
        return Err("final values differ from the record".into());
    }
    if bar + int(iso) < target {
        return Err("condition (3) fails".into());
    }
    Ok(())
}

/// Result of checking the certificate conditions over every induced
/// subgraph of a root graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ClassCheck {
    /// Every induced subgraph with an edge has a certificate and condition
    /// (1) holds on edgeless ones, so the bound is implied.
    Certified,
    /// No certificate within the depth cap for this induced subgraph.
    MissingCertificate { subgraph: VertexSet },
    /// `f(H) > |V(H)|` for this edgeless induced subgraph.
    Condition1Fails { subgraph: VertexSet },
    /// Root too large for the `2^n` closure check.
    Skipped { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeOutcome {
    pub f_id: String,
    pub certificate: Option<MeCertificate>,
    pub class: ClassCheck,
}

/// Searches a certificate for `g` and for every induced subgraph of `g`
/// (in increasing bit-pattern order, stopping at the first failure).
pub fn certify_class(g: &Graph, f: &dyn MeFunction, depth_cap: usize) -> MeOutcome {
    let mut ev = Evaluator::new(g, f);
    let full = g.vertices();
    let certificate = if g.edge_count() == 0 {
        None
    } else {
        find_sequence(&mut ev, full, depth_cap, f.canonical_first())
            .map(|seq| certificate(&mut ev, f.id(), full, seq))
    };
    let class = if g.n() > CLASS_CHECK_MAX_VERTICES {
        ClassCheck::Skipped { n: g.n() }
    } else {
        class_closure(g, &mut ev, depth_cap, f.canonical_first(), certificate.is_some())
    };
    MeOutcome {
        f_id: f.id().to_string(),
        certificate,
        class,
    }
}

fn class_closure(
    g: &Graph,
    ev: &mut Evaluator,
    depth_cap: usize,
    canonical: bool,
    root_ok: bool,
) -> ClassCheck {
    let full = g.vertices();
    for u in full.subsets() {
        let has_edge = u.iter().any(|v| g.neighbors(v).intersects(u));
        if !has_edge {
            if ev.value(u) > int(u.len()) {
                return ClassCheck::Condition1Fails { subgraph: u };
            }
            continue;
        }
        let ok = if u == full {
            root_ok
        } else {
            find_sequence(ev, u, depth_cap, canonical).is_some()
        };
        if !ok {
            return ClassCheck::MissingCertificate { subgraph: u };
        }
    }
    ClassCheck::Certified
}
