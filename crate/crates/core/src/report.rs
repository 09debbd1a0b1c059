//! Per-graph invariant reports with a stable JSON shape.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundCheck, GraphAnalysis, GraphFacts, RuleRegistry, Verdict};
use crate::families::write_graph6;
use crate::graph::Graph;
use crate::hochster::HochsterResult;
use crate::homology::Prime;

pub const SCHEMA_VERSION: u32 = 1;

/// Results at one characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicReport {
    pub p: Prime,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hochster: Option<HochsterResult>,
    /// `β̃_k(ind G)` for `k = -1, 0, 1, ...`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub betti: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub checks: Vec<BoundCheck>,
}

/// An invariant whose value depends on the characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub invariant: String,
    pub values: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub source: String,
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
    pub dim_ind: isize,
    pub facts: GraphFacts,
    pub characteristics: Vec<CharacteristicReport>,
    pub characteristic_disagreements: Vec<Disagreement>,
}

impl GraphReport {
    pub fn violations(&self) -> impl Iterator<Item = (Prime, &BoundCheck)> {
        self.characteristics
            .iter()
            .flat_map(|c| c.checks.iter().map(move |b| (c.p, b)))
            .filter(|(_, b)| b.verdict == Verdict::Violated)
    }

    pub fn at(&self, p: Prime) -> Option<&CharacteristicReport> {
        self.characteristics.iter().find(|c| c.p == p)
    }

    /// `pd` at the first characteristic that produced one.
    pub fn pd(&self) -> Option<usize> {
        self.characteristics.iter().find_map(|c| c.hochster.as_ref().map(|h| h.pd))
    }
}

/// Full analysis of `g` at every characteristic in `chars`.
pub fn analyze(source: impl Into<String>, g: &Graph, chars: &[Prime], rules: &RuleRegistry) -> GraphReport {
    let facts = GraphFacts::compute(g);
    let characteristics: Vec<CharacteristicReport> = chars
        .iter()
        .map(|&p| characteristic(g, &facts, p, rules))
        .collect();
    let characteristic_disagreements = disagreements(&characteristics);
    GraphReport {
        source: source.into(),
        n: g.n(),
        edges: g.edge_count(),
        graph6: write_graph6(g),
        dim_ind: facts.independence_number as isize - 1,
        characteristics,
        characteristic_disagreements,
        facts,
    }
}

fn characteristic(g: &Graph, facts: &GraphFacts, p: Prime, rules: &RuleRegistry) -> CharacteristicReport {
    let analysis = GraphAnalysis::new(g, facts, p);
    let checks = rules.run(&analysis, None);
    let mut error = None;
    let hochster = match &analysis.table {
        Ok(t) => Some(HochsterResult {
            p,
            pd: t.pd(),
            reg: t.reg(),
            bh: facts.bh,
            pd_witness: t.pd_witness(),
            reg_witness: t.reg_witness(),
        }),
        Err(e) => {
            error = Some(e.to_string());
            None
        }
    };
    let betti = match &analysis.homology {
        Ok(h) => Some(h.betti.clone()),
        Err(e) => {
            error.get_or_insert_with(|| e.to_string());
            None
        }
    };
    CharacteristicReport {
        p,
        hochster,
        betti,
        error,
        checks,
    }
}

fn disagreements(chars: &[CharacteristicReport]) -> Vec<Disagreement> {
    let mut out = Vec::new();
    let mut compare = |name: &str, value: &dyn Fn(&CharacteristicReport) -> Option<String>| {
        let values: BTreeMap<String, String> = chars
            .iter()
            .filter_map(|c| value(c).map(|v| (c.p.to_string(), v)))
            .collect();
        let mut distinct: Vec<&String> = values.values().collect();
        distinct.dedup();
        if distinct.len() > 1 {
            out.push(Disagreement {
                invariant: name.to_string(),
                values,
            });
        }
    };
    compare("pd", &|c| c.hochster.as_ref().map(|h| h.pd.to_string()));
    compare("reg", &|c| c.hochster.as_ref().map(|h| h.reg.to_string()));
    compare("betti", &|c| c.betti.as_ref().map(|b| format!("{b:?}")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn cycle_report() {
        let r = analyze("C5", &cycle(5), &[Prime::TWO], &RuleRegistry::standard());
        assert_eq!(r.pd(), Some(3));
        assert_eq!(r.facts.gamma(), 2);
        assert_eq!(r.facts.epsilon(), Some(2));
        assert_eq!(r.facts.tau(), Some(1));
        assert_eq!(r.graph6, "Dhc");
        assert_eq!(r.violations().count(), 0);
        assert!(r.characteristic_disagreements.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let r = analyze("P6", &path(6), &[Prime::TWO, Prime::THREE], &RuleRegistry::standard());
        let json = serde_json::to_string(&r).unwrap();
        let back: GraphReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn disagreements_are_reported_per_invariant() {
        let mk = |p: Prime, betti: Vec<u64>| CharacteristicReport {
            p,
            hochster: None,
            betti: Some(betti),
            error: None,
            checks: vec![],
        };
        let d = disagreements(&[mk(Prime::TWO, vec![0, 0, 1]), mk(Prime::THREE, vec![0, 0, 0])]);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].invariant, "betti");
        assert_eq!(d[0].values["2"], "[0, 0, 1]");
    }
}
