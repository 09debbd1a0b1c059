//! Known bounds on `pd`, `reg`, domination parameters and the homology of
//! `ind(G)`, each encoded as a checkable rule.
//!
//! A rule evaluates its hypothesis on the graph, computes its bound in exact
//! arithmetic and compares it with ground truth from [`crate::hochster`] and
//! [`crate::homology`]. A [`Verdict::Violated`] is only produced when the
//! hypothesis holds and the inequality fails.
//!
//! Homology rules share one shape: "`H̃_k(ind G) = 0` for every `k` below a
//! threshold". Their `actual` is the lowest degree with nonzero homology
//! (`inf` when `ind G` is acyclic) and their `bound` is the threshold, so the
//! claim reads `actual ≥ bound`.

pub mod me;
mod num;
mod rules;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use me::{
    certify_class, replay, search_me_certificate, ClassCheck, MeCertificate, MeFunction, MeOutcome,
    MeRegistry, DEFAULT_DEPTH_CAP,
};
pub use num::ExtNum;

use crate::domination::{self, DominationReport};
use crate::graph::Graph;
use crate::hochster::{self, HochsterError, HochsterTable};
use crate::homology::{reduced_homology, HomologyError, HomologyProfile, Prime, DEFAULT_FACE_BUDGET};
use crate::vertex_set::VertexSet;
use crate::Rational;

macro_rules! rule_ids {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum RuleId {
            $($variant,)*
        }

        impl RuleId {
            pub const ALL: &'static [RuleId] = &[$(RuleId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(RuleId::$variant => $name,)*
                }
            }
        }
    };
}

rule_ids! {
    PdEdgedom => "PD_EDGEDOM",
    PdTau => "PD_TAU",
    PdLowerI => "PD_LOWER_I",
    PdLowerGamma0 => "PD_LOWER_GAMMA0",
    PdBigheight => "PD_BIGHEIGHT",
    PdChordalEq => "PD_CHORDAL_EQ",
    PdLargegamma => "PD_LARGEGAMMA",
    PdMcondition => "PD_MCONDITION",
    PdInddim => "PD_INDDIM",
    PdZell => "PD_ZELL",
    PdChromatic => "PD_CHROMATIC",
    RegChromatic => "REG_CHROMATIC",
    Amalgam => "AMALGAM",
    MeBound => "ME_BOUND",
    LemmaPdinduct => "LEMMA_PDINDUCT",
    LemmaPropm => "LEMMA_PROPM",
    LemmaDelete => "LEMMA_DELETE",
    DomGammaind => "DOM_GAMMAIND",
    DomAlh => "DOM_ALH",
    LongEq => "LONG_EQ",
    ClawfreeEq => "CLAWFREE_EQ",
    HomPd => "HOM_PD",
    HomChordal => "HOM_CHORDAL",
    HomEpsilon => "HOM_EPSILON",
    HomGamma0Half => "HOM_GAMMA0_HALF",
    HomTau => "HOM_TAU",
    HomK1m => "HOM_K1M",
    HomDist3 => "HOM_DIST3",
    HomLattice => "HOM_LATTICE",
    HomMcondition => "HOM_MCONDITION",
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let upper = s.to_ascii_uppercase().replace('-', "_");
        RuleId::ALL
            .iter()
            .copied()
            .find(|r| r.name() == upper)
            .ok_or_else(|| format!("unknown rule '{s}'"))
    }
}

impl Serialize for RuleId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for RuleId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// How `actual` must compare with `bound` for the rule to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub rule: RuleId,
    /// Distinguishes several checks of one rule (`m=2`, `x=4`, ...).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub param: Option<String>,
    pub relation: Relation,
    pub hypothesis_met: bool,
    pub reason: String,
    pub bound: ExtNum,
    pub actual: ExtNum,
    pub verdict: Verdict,
}

impl BoundCheck {
    /// A check whose hypothesis holds; the verdict follows from comparing
    /// `actual` with `bound`.
    pub fn evaluate(
        rule: RuleId,
        param: Option<String>,
        relation: Relation,
        bound: ExtNum,
        actual: ExtNum,
        reason: impl Into<String>,
    ) -> Self {
        use std::cmp::Ordering::*;
        let verdict = match (actual.compare(bound), relation) {
            (None, _) => Verdict::Inapplicable,
            (Some(Less | Equal), Relation::Le)
            | (Some(Greater | Equal), Relation::Ge)
            | (Some(Equal), Relation::Eq) => Verdict::Holds,
            _ => Verdict::Violated,
        };
        BoundCheck {
            rule,
            param,
            relation,
            hypothesis_met: true,
            reason: reason.into(),
            bound,
            actual,
            verdict,
        }
    }

    pub fn inapplicable(rule: RuleId, param: Option<String>, relation: Relation, reason: impl Into<String>) -> Self {
        BoundCheck {
            rule,
            param,
            relation,
            hypothesis_met: false,
            reason: reason.into(),
            bound: ExtNum::Inapplicable,
            actual: ExtNum::Inapplicable,
            verdict: Verdict::Inapplicable,
        }
    }

    /// `RULE` or `RULE[param]`.
    pub fn label(&self) -> String {
        match &self.param {
            Some(p) => format!("{}[{p}]", self.rule),
            None => self.rule.to_string(),
        }
    }
}

/// Characteristic-independent facts about a graph, computed once and shared
/// by every rule and every characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFacts {
    pub n: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub domination: DominationReport,
    pub chi_complement: usize,
    pub independence_number: usize,
    pub chordal: bool,
    pub long: bool,
    pub claw_free: bool,
    pub connected: bool,
    /// Order of the smallest connected component (0 for the null graph).
    pub smallest_component: usize,
    pub bh: usize,
    pub me: Vec<MeOutcome>,
}

impl GraphFacts {
    pub fn compute(g: &Graph) -> Self {
        let registry = MeRegistry::standard();
        GraphFacts {
            n: g.n(),
            edges: g.edge_count(),
            max_degree: g.max_degree(),
            domination: DominationReport::compute(g),
            chi_complement: domination::chromatic_number(&g.complement()),
            independence_number: g.independence_number_within(g.vertices()),
            chordal: g.is_chordal(),
            long: g.is_long(),
            claw_free: g.is_claw_free(),
            connected: g.is_connected(),
            smallest_component: g.components().iter().map(|c| c.len()).min().unwrap_or(0),
            bh: hochster::big_height(g),
            me: registry
                .iter()
                .map(|f| certify_class(g, f, DEFAULT_DEPTH_CAP))
                .collect(),
        }
    }

    pub fn has_isolated(&self) -> bool {
        self.domination.epsilon.feasible().is_none()
    }

    pub fn gamma(&self) -> usize {
        self.domination.gamma.value
    }

    pub fn idom(&self) -> usize {
        self.domination.idom.value
    }

    pub fn gamma0(&self) -> Option<usize> {
        self.domination.gamma0.feasible().map(|s| s.value)
    }

    pub fn tau(&self) -> Option<usize> {
        self.domination.tau.feasible().map(|s| s.value)
    }

    pub fn epsilon(&self) -> Option<usize> {
        self.domination.epsilon.feasible().map(|s| s.value)
    }
}

/// Everything the rules need for one graph at one characteristic.
pub struct GraphAnalysis<'a> {
    pub graph: &'a Graph,
    pub facts: &'a GraphFacts,
    pub p: Prime,
    pub table: Result<HochsterTable, HochsterError>,
    pub homology: Result<HomologyProfile, HomologyError>,
}

impl<'a> GraphAnalysis<'a> {
    pub fn new(graph: &'a Graph, facts: &'a GraphFacts, p: Prime) -> Self {
        GraphAnalysis {
            graph,
            facts,
            p,
            table: HochsterTable::build(graph, p),
            homology: reduced_homology(graph, graph.vertices(), p, DEFAULT_FACE_BUDGET),
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn pd(&self) -> Result<usize, String> {
        self.table.as_ref().map(|t| t.pd()).map_err(|e| e.to_string())
    }

    pub fn reg(&self) -> Result<usize, String> {
        self.table.as_ref().map(|t| t.reg()).map_err(|e| e.to_string())
    }

    /// Lowest `k` with `H̃_k(ind G) ≠ 0`, or `inf`.
    pub fn lowest_nonzero_degree(&self) -> Result<ExtNum, String> {
        let profile = self.homology.as_ref().map_err(|e| e.to_string())?;
        Ok(profile
            .nonzero_degrees()
            .next()
            .map_or(ExtNum::PosInf, ExtNum::from))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleFamily {
    /// Inequalities between `pd`, `reg` and graph parameters.
    Bound,
    /// Vanishing ranges for `H̃_*(ind G)`.
    Homology,
}

pub trait BoundRule: Send + Sync {
    fn id(&self) -> RuleId;
    fn family(&self) -> RuleFamily;
    fn check(&self, analysis: &GraphAnalysis) -> Vec<BoundCheck>;
}

pub struct RuleRegistry {
    rules: Vec<Box<dyn BoundRule>>,
}

impl RuleRegistry {
    /// Every rule, in [`RuleId`] order.
    pub fn standard() -> Self {
        let mut rules = rules::standard();
        rules.sort_by_key(|r| r.id());
        RuleRegistry { rules }
    }

    /// The standard rules restricted to `ids`.
    pub fn select(ids: &[RuleId]) -> Self {
        let mut registry = Self::standard();
        registry.rules.retain(|r| ids.contains(&r.id()));
        registry
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn BoundRule> {
        self.rules.iter().map(|r| r.as_ref())
    }

    pub fn get(&self, id: RuleId) -> Option<&dyn BoundRule> {
        self.iter().find(|r| r.id() == id)
    }

    /// Runs the rules of `family` (all rules when `None`).
    pub fn run(&self, analysis: &GraphAnalysis, family: Option<RuleFamily>) -> Vec<BoundCheck> {
        self.iter()
            .filter(|r| family.is_none_or(|f| r.family() == f))
            .flat_map(|r| r.check(analysis))
            .collect()
    }
}

/// Every bound rule on `g` at characteristic `p`.
pub fn check_all(g: &Graph, p: Prime) -> Vec<BoundCheck> {
    let facts = GraphFacts::compute(g);
    let analysis = GraphAnalysis::new(g, &facts, p);
    RuleRegistry::standard().run(&analysis, Some(RuleFamily::Bound))
}

/// Every homology vanishing rule on `g` at characteristic `p`.
pub fn check_homology_vanishing(g: &Graph, p: Prime) -> Vec<BoundCheck> {
    let facts = GraphFacts::compute(g);
    let analysis = GraphAnalysis::new(g, &facts, p);
    RuleRegistry::standard().run(&analysis, Some(RuleFamily::Homology))
}

/// Largest number of `m`-subsets scanned for the hypothesis of
/// [`check_propm`].
pub const PROPM_SUBSET_BUDGET: u64 = 1 << 20;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// If every `m`-subset of vertices spans an edge, some vertex has degree at
/// least `n/(m−1) − 1`.
pub fn check_propm(g: &Graph, m: usize) -> BoundCheck {
    let rule = RuleId::LemmaPropm;
    let param = Some(format!("m={m}"));
    if m < 2 {
        return BoundCheck::inapplicable(rule, param, Relation::Ge, "needs m >= 2");
    }
    if m > g.n() {
        return BoundCheck::inapplicable(rule, param, Relation::Ge, "no m-subsets");
    }
    let count = binomial(g.n() as u64, m as u64);
    if count > PROPM_SUBSET_BUDGET {
        return BoundCheck::inapplicable(
            rule,
            param,
            Relation::Ge,
            format!("{count} subsets exceed the scan budget"),
        );
    }
    if let Some(w) = independent_subset_of_size(g, m) {
        return BoundCheck::inapplicable(rule, param, Relation::Ge, format!("{w} is independent"));
    }
    let bound = Rational::new(g.n() as i64, m as i64 - 1) - Rational::from_integer(1);
    BoundCheck::evaluate(
        rule,
        param,
        Relation::Ge,
        ExtNum::rational(bound),
        ExtNum::from(g.max_degree()),
        "every m-subset spans an edge",
    )
}

/// First independent `m`-subset in lexicographic order, scanning every
/// `m`-subset.
fn independent_subset_of_size(g: &Graph, m: usize) -> Option<VertexSet> {
    fn go(g: &Graph, start: usize, chosen: VertexSet, m: usize) -> Option<VertexSet> {
        if chosen.len() == m {
            return g.is_independent(chosen).then_some(chosen);
        }
        (start..g.n()).find_map(|v| go(g, v + 1, chosen.with(v), m))
    }
    go(g, 0, VertexSet::EMPTY, m)
}

/// Ceiling of a rational as an integer `ExtNum`.
pub(crate) fn ceil(r: Rational) -> ExtNum {
    ExtNum::Int(r.ceil().to_integer())
}

/// Floor of a rational as an integer `ExtNum`.
pub(crate) fn floor(r: Rational) -> ExtNum {
    ExtNum::Int(r.floor().to_integer())
}

pub(crate) fn int(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}
