//! Seeded verification corpora, golden values and suite reports.
//!
//! Every corpus is a pure function of its options, and graphs are analyzed
//! in parallel but collected in corpus order, so reports are byte-identical
//! for any thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundCheck, RuleId, RuleRegistry, Verdict};
use crate::families::{generate, random_gnp, subdivide_heavy_edges, FamilySpec, Probability};
use crate::graph::Graph;
use crate::homology::Prime;
use crate::report::{analyze, Disagreement, GraphReport, SCHEMA_VERSION};

/// Largest graph admitted to any corpus.
pub const SUITE_VERTEX_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteKind {
    PaperGolden,
    Random,
    Chordal,
    Long,
    Lattice,
    All,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 6] = [
        SuiteKind::PaperGolden,
        SuiteKind::Random,
        SuiteKind::Chordal,
        SuiteKind::Long,
        SuiteKind::Lattice,
        SuiteKind::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::PaperGolden => "paper_golden",
            SuiteKind::Random => "random",
            SuiteKind::Chordal => "chordal",
            SuiteKind::Long => "long",
            SuiteKind::Lattice => "lattice",
            SuiteKind::All => "all",
        }
    }

    fn default_n_max(self) -> usize {
        match self {
            SuiteKind::Random => 10,
            _ => 12,
        }
    }

    fn default_seeds(self) -> usize {
        match self {
            SuiteKind::Random => 200,
            SuiteKind::Chordal | SuiteKind::Long => 100,
            SuiteKind::Lattice => 50,
            SuiteKind::PaperGolden | SuiteKind::All => 0,
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = SuiteKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown suite '{s}' (expected one of: {})", names.join(", "))
            })
    }
}

/// Corpus size controls. `None` picks the per-suite default.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub n_max: Option<usize>,
    pub seeds: Option<usize>,
    pub chars: Vec<Prime>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n_max: None,
            seeds: None,
            chars: vec![Prime::TWO],
        }
    }
}

impl SuiteOptions {
    fn n_max(&self, kind: SuiteKind) -> usize {
        self.n_max.unwrap_or(kind.default_n_max()).clamp(4, SUITE_VERTEX_CAP)
    }

    fn seeds(&self, kind: SuiteKind) -> usize {
        self.seeds.unwrap_or(kind.default_seeds())
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub corpus: SuiteKind,
    pub label: String,
    pub graph: Graph,
}

impl CorpusEntry {
    fn new(corpus: SuiteKind, label: String, graph: Graph) -> Self {
        CorpusEntry { corpus, label, graph }
    }

    fn from_spec(corpus: SuiteKind, spec: FamilySpec) -> Self {
        let graph = generate(&spec).expect("corpus parameters are valid");
        CorpusEntry::new(corpus, spec.label(), graph)
    }
}

const DENSITIES: [(u32, u32); 3] = [(1, 4), (1, 2), (3, 4)];

fn density(i: usize) -> Probability {
    let (num, den) = DENSITIES[i % DENSITIES.len()];
    Probability::new(num, den).expect("valid density")
}

fn grid(side: i64) -> Vec<Vec<i64>> {
    (0..side).flat_map(|x| (0..side).map(move |y| vec![x, y])).collect()
}

fn golden_corpus() -> Vec<CorpusEntry> {
    use FamilySpec::*;
    let corpus = SuiteKind::PaperGolden;
    let mut specs = Vec::new();
    specs.extend((2..=12).map(|n| Path { n }));
    specs.extend((3..=12).map(|n| Cycle { n }));
    specs.extend((1..=4).map(|d| CompleteBipartite { m: d, n: d }));
    specs.extend((2..=8).map(|n| Complete { n }));
    specs.extend((1..=3).map(|n| PentagonChain { n }));
    specs.extend((1..=2).map(|n| PendantPath { n }));
    specs.push(Figure1Tree);
    specs.push(Lattice { coords: grid(3) });
    specs.into_iter().map(|s| CorpusEntry::from_spec(corpus, s)).collect()
}

fn random_corpus(opts: &SuiteOptions) -> Vec<CorpusEntry> {
    let kind = SuiteKind::Random;
    let seeds = opts.seeds(kind);
    (4..=opts.n_max(kind))
        .flat_map(|n| {
            (0..seeds).map(move |s| FamilySpec::RandomGnp {
                n,
                p: density(s),
                seed: 1_000_000 + 10_000 * n as u64 + s as u64,
            })
        })
        .map(|spec| CorpusEntry::from_spec(kind, spec))
        .collect()
}

/// `n` cycles through `4..=n_max`.
fn cycling_n(s: usize, n_max: usize) -> usize {
    4 + s % (n_max - 3)
}

fn chordal_corpus(opts: &SuiteOptions) -> Vec<CorpusEntry> {
    let kind = SuiteKind::Chordal;
    let n_max = opts.n_max(kind);
    (0..opts.seeds(kind))
        .map(|s| FamilySpec::RandomChordal {
            n: cycling_n(s, n_max),
            seed: 2_000_000 + s as u64,
        })
        .map(|spec| CorpusEntry::from_spec(kind, spec))
        .collect()
}

/// Deletes edges between two vertices of degree > 2 (lexicographically
/// first such edge each round) until none is left; the result is long.
pub fn prune_to_long(g: &Graph) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    loop {
        let h = Graph::from_edges(g.n(), &edges).expect("same vertex set");
        match edges.iter().position(|&(u, v)| h.degree(u) > 2 && h.degree(v) > 2) {
            Some(i) => {
                edges.remove(i);
            }
            None => return h,
        }
    }
}

fn long_corpus(opts: &SuiteOptions) -> Vec<CorpusEntry> {
    let kind = SuiteKind::Long;
    let n_max = opts.n_max(kind);
    let seeds = opts.seeds(kind);
    let mut out: Vec<CorpusEntry> = (0..seeds)
        .map(|s| {
            let (n, p, seed) = (cycling_n(s, n_max), density(s), 3_000_000 + s as u64);
            let g = prune_to_long(&random_gnp(n, p, seed));
            CorpusEntry::new(kind, format!("pruned-long(n={n},p={p},seed={seed})"), g)
        })
        .collect();
    // Subdivision of heavy edges applied to random graphs; base seeds are
    // skipped until the subdivided graph fits the vertex cap.
    for s in 0..seeds.div_ceil(2) {
        let n = 4 + s % 4;
        let p = Probability::HALF;
        let (seed, g) = (0..)
            .map(|attempt| 4_000_000 + 1_000 * s as u64 + attempt)
            .map(|seed| (seed, subdivide_heavy_edges(&random_gnp(n, p, seed))))
            .find_map(|(seed, g)| g.ok().filter(|g| g.n() <= SUITE_VERTEX_CAP).map(|g| (seed, g)))
            .expect("small bases fit");
        out.push(CorpusEntry::new(kind, format!("subdivided(n={n},p={p},seed={seed})"), g));
    }
    out
}

fn lattice_corpus(opts: &SuiteOptions) -> Vec<CorpusEntry> {
    let kind = SuiteKind::Lattice;
    let n_max = opts.n_max(kind);
    (0..opts.seeds(kind))
        .map(|s| FamilySpec::RandomLattice {
            dim: 2,
            side: 4,
            count: cycling_n(s, n_max),
            seed: 5_000_000 + s as u64,
        })
        .map(|spec| CorpusEntry::from_spec(kind, spec))
        .collect()
}

/// The graphs of a suite, in report order.
pub fn corpus(kind: SuiteKind, opts: &SuiteOptions) -> Vec<CorpusEntry> {
    match kind {
        SuiteKind::PaperGolden => golden_corpus(),
        SuiteKind::Random => random_corpus(opts),
        SuiteKind::Chordal => chordal_corpus(opts),
        SuiteKind::Long => long_corpus(opts),
        SuiteKind::Lattice => lattice_corpus(opts),
        SuiteKind::All => [
            SuiteKind::PaperGolden,
            SuiteKind::Random,
            SuiteKind::Chordal,
            SuiteKind::Long,
            SuiteKind::Lattice,
        ]
        .into_iter()
        .flat_map(|k| corpus(k, opts))
        .collect(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub holds: usize,
    pub violated: usize,
    pub inapplicable: usize,
}

impl Tally {
    fn add(&mut self, verdict: Verdict) {
        match verdict {
            Verdict::Holds => self.holds += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::Inapplicable => self.inapplicable += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub graph: String,
    pub p: Prime,
    pub check: BoundCheck,
    /// For minimization.
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteGraph {
    pub corpus: SuiteKind,
    #[serde(flatten)]
    pub report: GraphReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: SuiteKind,
    pub options: SuiteOptions,
    pub graph_count: usize,
    pub rule_summary: BTreeMap<RuleId, Tally>,
    pub violations: Vec<ViolationRecord>,
    pub golden: Vec<GoldenCheck>,
    pub characteristic_disagreements: BTreeMap<String, Vec<Disagreement>>,
    pub graphs: Vec<SuiteGraph>,
}

impl SuiteReport {
    pub fn golden_failures(&self) -> impl Iterator<Item = &GoldenCheck> {
        self.golden.iter().filter(|g| !g.passed)
    }

    /// No violated bound and no failed golden value.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.golden_failures().next().is_none()
    }

    /// `rule,holds,violated,inapplicable` rows.
    pub fn csv_summary(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = ["rule", "holds", "violated", "inapplicable"];
        w.write_record(header).expect("in-memory write");
        for (rule, t) in &self.rule_summary {
            let row = [rule.to_string(), t.holds.to_string(), t.violated.to_string(), t.inapplicable.to_string()];
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii rows")
    }
}

/// Runs a suite. Graph analyses run on the current rayon pool.
pub fn run_suite(kind: SuiteKind, opts: &SuiteOptions) -> SuiteReport {
    let entries = corpus(kind, opts);
    let rules = RuleRegistry::standard();
    let graphs: Vec<SuiteGraph> = entries
        .par_iter()
        .map(|e| SuiteGraph {
            corpus: e.corpus,
            report: analyze(e.label.clone(), &e.graph, &opts.chars, &rules),
        })
        .collect();

    let mut rule_summary: BTreeMap<RuleId, Tally> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut characteristic_disagreements = BTreeMap::new();
    for (entry, sg) in entries.iter().zip(&graphs) {
        for c in &sg.report.characteristics {
            for check in &c.checks {
                rule_summary.entry(check.rule).or_default().add(check.verdict);
            }
        }
        for (p, check) in sg.report.violations() {
            violations.push(ViolationRecord {
                graph: entry.label.clone(),
                p,
                check: check.clone(),
                n: entry.graph.n(),
                edges: entry.graph.edges().collect(),
            });
        }
        if !sg.report.characteristic_disagreements.is_empty() {
            characteristic_disagreements.insert(entry.label.clone(), sg.report.characteristic_disagreements.clone());
        }
    }
    let golden = if matches!(kind, SuiteKind::PaperGolden | SuiteKind::All) {
        golden_checks(&graphs, &opts.chars)
    } else {
        Vec::new()
    };
    SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: kind,
        options: opts.clone(),
        graph_count: graphs.len(),
        rule_summary,
        violations,
        golden,
        characteristic_disagreements,
        graphs,
    }
}

struct Golden<'a> {
    by_label: BTreeMap<&'a str, &'a GraphReport>,
    chars: &'a [Prime],
    out: Vec<GoldenCheck>,
}

impl<'a> Golden<'a> {
    fn report(&self, spec: &FamilySpec) -> Option<&'a GraphReport> {
        self.by_label.get(spec.label().as_str()).copied()
    }

    fn push(&mut self, name: String, expected: String, actual: Option<String>, passed: bool) {
        self.out.push(GoldenCheck {
            name,
            expected,
            actual: actual.unwrap_or_else(|| "missing".into()),
            passed,
        });
    }

    fn exact(&mut self, spec: &FamilySpec, what: &str, expected: usize, value: impl Fn(&GraphReport) -> Option<usize>) {
        let actual = self.report(spec).and_then(&value);
        let name = format!("{what}({})", spec.label());
        self.push(name, expected.to_string(), actual.map(|v| v.to_string()), actual == Some(expected));
    }

    fn at_least(&mut self, spec: &FamilySpec, what: &str, expected: usize, value: impl Fn(&GraphReport) -> Option<usize>) {
        let actual = self.report(spec).and_then(&value);
        let name = format!("{what}({})", spec.label());
        self.push(name, format!(">= {expected}"), actual.map(|v| v.to_string()), actual.is_some_and(|v| v >= expected));
    }

    /// `pd` at every characteristic.
    fn pd(&mut self, spec: &FamilySpec, expected: usize) {
        for &p in self.chars {
            self.exact(spec, &format!("pd@{p}"), expected, |r| r.at(p)?.hochster.as_ref().map(|h| h.pd));
        }
    }

    /// The bound reported by `rule` equals `pd` on this graph.
    fn sharp(&mut self, spec: &FamilySpec, rule: RuleId) {
        for &p in self.chars {
            let check = self
                .report(spec)
                .and_then(|r| r.at(p))
                .and_then(|c| c.checks.iter().find(|b| b.rule == rule));
            let (bound, actual) = check.map_or((None, None), |c| (Some(c.bound), Some(c.actual)));
            let name = format!("{rule} sharp@{p}({})", spec.label());
            let passed = bound.is_some() && bound == actual && check.is_some_and(|c| c.verdict == Verdict::Holds);
            self.push(
                name,
                actual.map_or("pd".into(), |a| a.to_string()),
                bound.map(|b| b.to_string()),
                passed,
            );
        }
    }
}

fn golden_checks(graphs: &[SuiteGraph], chars: &[Prime]) -> Vec<GoldenCheck> {
    use FamilySpec::*;
    let mut g = Golden {
        by_label: graphs
            .iter()
            .filter(|s| s.corpus == SuiteKind::PaperGolden)
            .map(|s| (s.report.source.as_str(), &s.report))
            .collect(),
        chars,
        out: Vec::new(),
    };
    let idom = |r: &GraphReport| Some(r.facts.idom());
    let gamma = |r: &GraphReport| Some(r.facts.gamma());
    let tau = |r: &GraphReport| r.facts.tau();
    let eps = |r: &GraphReport| r.facts.epsilon();

    for n in 2..=12 {
        let spec = Path { n };
        g.pd(&spec, 2 * n / 3);
        g.exact(&spec, "i", n.div_ceil(3), idom);
        g.exact(&spec, "tau", n.div_ceil(3), tau);
    }
    for n in 3..=12 {
        let spec = Cycle { n };
        g.pd(&spec, (2 * n - 1).div_ceil(3));
        g.exact(&spec, "i", n.div_ceil(3), idom);
        g.exact(&spec, "gamma", n.div_ceil(3), gamma);
        g.exact(&spec, "epsilon", n.div_ceil(4), eps);
        g.exact(&spec, "tau", n / 3, tau);
        if n % 3 != 1 {
            g.pd(&spec, n - n.div_ceil(3));
        }
    }
    for d in 1..=4 {
        let spec = CompleteBipartite { m: d, n: d };
        g.pd(&spec, 2 * d - 1);
        g.exact(&spec, "chi_complement", d, |r| Some(r.facts.chi_complement));
        if d >= 2 {
            g.sharp(&spec, RuleId::PdChromatic);
        }
    }
    for n in 2..=8 {
        let spec = Complete { n };
        g.pd(&spec, n - 1);
        g.sharp(&spec, RuleId::PdChromatic);
    }
    g.exact(&Cycle { n: 5 }, "epsilon", 2, eps);
    g.exact(&Cycle { n: 5 }, "tau", 1, tau);
    g.exact(&Path { n: 4 }, "epsilon", 1, eps);
    g.exact(&Path { n: 4 }, "tau", 2, tau);
    for n in 1..=3 {
        g.exact(&PentagonChain { n }, "epsilon", 2 * n - 1, eps);
        g.exact(&PentagonChain { n }, "tau", n, tau);
    }
    for n in 1..=2 {
        g.exact(&PendantPath { n }, "epsilon", n, eps);
        g.at_least(&PendantPath { n }, "tau", 2 * n, tau);
    }
    g.exact(&Figure1Tree, "i", 3, idom);
    g.exact(&Figure1Tree, "gamma", 3, gamma);
    g.exact(&Figure1Tree, "long", 0, |r| Some(r.facts.long as usize));
    let grid = Lattice { coords: grid(3) };
    for &p in chars {
        let bound = g
            .report(&grid)
            .and_then(|r| r.at(p))
            .and_then(|c| c.checks.iter().find(|b| b.rule == RuleId::PdZell))
            .map(|c| c.bound.to_string());
        let passed = bound.as_deref() == Some("7");
        g.push(format!("PD_ZELL bound@{p}({})", grid.label()), "7".into(), bound, passed);
    }
    g.out
}
