//! The rule catalogue. Each rule is a plain function wrapped in [`FnRule`].

use super::me::{ClassCheck, MeOutcome};
use super::{
    ceil, check_propm, floor, int, BoundCheck, BoundRule, ExtNum, GraphAnalysis, Relation, RuleFamily,
    RuleId,
};
use crate::domination;
use crate::vertex_set::VertexSet;
use crate::Rational;

type CheckFn = fn(&GraphAnalysis) -> Vec<BoundCheck>;

struct FnRule {
    id: RuleId,
    family: RuleFamily,
    check: CheckFn,
}

impl BoundRule for FnRule {
    fn id(&self) -> RuleId {
        self.id
    }

    fn family(&self) -> RuleFamily {
        self.family
    }

    fn check(&self, analysis: &GraphAnalysis) -> Vec<BoundCheck> {
        (self.check)(analysis)
    }
}

pub(super) fn standard() -> Vec<Box<dyn BoundRule>> {
    use RuleFamily::{Bound, Homology};
    let table: [(RuleId, RuleFamily, CheckFn); 30] = [
        (RuleId::PdEdgedom, Bound, pd_edgedom),
        (RuleId::PdTau, Bound, pd_tau),
        (RuleId::PdLowerI, Bound, pd_lower_i),
        (RuleId::PdLowerGamma0, Bound, pd_lower_gamma0),
        (RuleId::PdBigheight, Bound, pd_bigheight),
        (RuleId::PdChordalEq, Bound, pd_chordal_eq),
        (RuleId::PdLargegamma, Bound, pd_largegamma),
        (RuleId::PdMcondition, Bound, pd_mcondition),
        (RuleId::PdInddim, Bound, pd_inddim),
        (RuleId::PdZell, Bound, pd_zell),
        (RuleId::PdChromatic, Bound, pd_chromatic),
        (RuleId::RegChromatic, Bound, reg_chromatic),
        (RuleId::Amalgam, Bound, amalgam),
        (RuleId::MeBound, Bound, me_bound),
        (RuleId::LemmaPdinduct, Bound, lemma_pdinduct),
        (RuleId::LemmaPropm, Bound, lemma_propm),
        (RuleId::LemmaDelete, Bound, lemma_delete),
        (RuleId::DomGammaind, Bound, dom_gammaind),
        (RuleId::DomAlh, Bound, dom_alh),
        (RuleId::LongEq, Bound, long_eq),
        (RuleId::ClawfreeEq, Bound, clawfree_eq),
        (RuleId::HomPd, Homology, hom_pd),
        (RuleId::HomChordal, Homology, hom_chordal),
        (RuleId::HomEpsilon, Homology, hom_epsilon),
        (RuleId::HomGamma0Half, Homology, hom_gamma0_half),
        (RuleId::HomTau, Homology, hom_tau),
        (RuleId::HomK1m, Homology, hom_k1m),
        (RuleId::HomDist3, Homology, hom_dist3),
        (RuleId::HomLattice, Homology, hom_lattice),
        (RuleId::HomMcondition, Homology, hom_mcondition),
    ];
    table
        .into_iter()
        .map(|(id, family, check)| Box::new(FnRule { id, family, check }) as Box<dyn BoundRule>)
        .collect()
}

const NO_ISOLATED: &str = "no isolated vertices";
const HAS_ISOLATED: &str = "graph has isolated vertices";
const COMPONENTS_3: &str = "every component has at least 3 vertices";
const SMALL_COMPONENT: &str = "has a K_2 component";

/// `i + γ₀ ≤ n` fails on `K_2` (1 + 2 > 2); it holds on connected graphs
/// with at least 3 vertices and adds up over components.
fn large_components(a: &GraphAnalysis) -> bool {
    a.facts.smallest_component >= 3
}

/// `pd ≤ bound` (or `≥`, `=`) with `pd` from the Hochster table.
fn pd_check(a: &GraphAnalysis, rule: RuleId, param: Option<String>, rel: Relation, bound: ExtNum, reason: &str) -> BoundCheck {
    match a.pd() {
        Ok(pd) => BoundCheck::evaluate(rule, param, rel, bound, ExtNum::from(pd), reason),
        Err(e) => BoundCheck::inapplicable(rule, param, rel, format!("pd unavailable: {e}")),
    }
}

/// `H̃_k(ind G) = 0` for all `k < threshold`.
fn vanishing(a: &GraphAnalysis, rule: RuleId, param: Option<String>, threshold: ExtNum, reason: &str) -> BoundCheck {
    match a.lowest_nonzero_degree() {
        Ok(lowest) => BoundCheck::evaluate(rule, param, Relation::Ge, threshold, lowest, reason),
        Err(e) => BoundCheck::inapplicable(rule, param, Relation::Ge, format!("homology unavailable: {e}")),
    }
}

fn n_minus(a: &GraphAnalysis, v: usize) -> ExtNum {
    ExtNum::Int(a.n() as i64 - v as i64)
}

fn pd_edgedom(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdEdgedom;
    vec![match a.facts.epsilon() {
        Some(eps) => pd_check(a, rule, None, Relation::Le, n_minus(a, eps), NO_ISOLATED),
        None => BoundCheck::inapplicable(rule, None, Relation::Le, HAS_ISOLATED),
    }]
}

fn pd_tau(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdTau;
    vec![match a.facts.tau() {
        Some(tau) => pd_check(a, rule, None, Relation::Le, n_minus(a, tau), NO_ISOLATED),
        None => BoundCheck::inapplicable(rule, None, Relation::Le, HAS_ISOLATED),
    }]
}

fn pd_lower_i(a: &GraphAnalysis) -> Vec<BoundCheck> {
    vec![pd_check(a, RuleId::PdLowerI, None, Relation::Ge, n_minus(a, a.facts.idom()), "any graph")]
}

fn pd_lower_gamma0(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdLowerGamma0;
    vec![match (a.facts.gamma0(), large_components(a)) {
        (Some(g0), true) => pd_check(a, rule, None, Relation::Ge, ExtNum::from(g0), COMPONENTS_3),
        (None, _) => BoundCheck::inapplicable(rule, None, Relation::Ge, HAS_ISOLATED),
        (Some(_), false) => BoundCheck::inapplicable(rule, None, Relation::Ge, SMALL_COMPONENT),
    }]
}

fn pd_bigheight(a: &GraphAnalysis) -> Vec<BoundCheck> {
    vec![pd_check(a, RuleId::PdBigheight, None, Relation::Ge, ExtNum::from(a.facts.bh), "any graph")]
}

fn pd_chordal_eq(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdChordalEq;
    let (p_i, p_bh) = (Some("n-i".to_string()), Some("bh".to_string()));
    if !a.facts.chordal {
        return vec![
            BoundCheck::inapplicable(rule, p_i, Relation::Eq, "not chordal"),
            BoundCheck::inapplicable(rule, p_bh, Relation::Eq, "not chordal"),
        ];
    }
    vec![
        pd_check(a, rule, p_i, Relation::Eq, n_minus(a, a.facts.idom()), "chordal"),
        pd_check(a, rule, p_bh, Relation::Eq, ExtNum::from(a.facts.bh), "chordal"),
    ]
}

fn pd_largegamma(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdLargegamma;
    let (p_g, p_d) = (Some("gamma".to_string()), Some("degree".to_string()));
    if !a.facts.chordal {
        return vec![
            BoundCheck::inapplicable(rule, p_g, Relation::Le, "not chordal"),
            BoundCheck::inapplicable(rule, p_d, Relation::Le, "not chordal"),
        ];
    }
    let n = int(a.n());
    let degree_bound = n - n / int(a.facts.max_degree + 1);
    vec![
        pd_check(a, rule, p_g, Relation::Le, n_minus(a, a.facts.gamma()), "chordal"),
        pd_check(a, rule, p_d, Relation::Le, floor(degree_bound), "chordal"),
    ]
}

/// `h = d + α·e + 1` from an α-max edge, or `None` without edges.
fn h_value(a: &GraphAnalysis, alpha: Rational) -> Option<Rational> {
    let edge = a.graph.alpha_max_edge(alpha).ok()?;
    Some(int(edge.d) + alpha * int(edge.e) + Rational::from_integer(1))
}

fn alpha_for(m: usize) -> Rational {
    Rational::new(m as i64 - 1, m as i64)
}

/// `n(1 − 1/h)` rounded down.
fn mcondition_bound(a: &GraphAnalysis, h: Rational) -> ExtNum {
    let n = int(a.n());
    floor(n - n / h)
}

fn pd_mcondition(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdMcondition;
    if a.facts.edges == 0 {
        return vec![BoundCheck::inapplicable(rule, None, Relation::Le, "no edges")];
    }
    (1..=a.facts.max_degree)
        .map(|m| {
            let param = Some(format!("m={m}"));
            if !a.graph.is_k1m_free(m + 1) {
                return BoundCheck::inapplicable(rule, param, Relation::Le, format!("contains an induced K_(1,{})", m + 1));
            }
            let h = h_value(a, alpha_for(m)).expect("graph has an edge");
            pd_check(a, rule, param, Relation::Le, mcondition_bound(a, h), "K_(1,m+1)-free")
        })
        .collect()
}

fn pd_inddim(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdInddim;
    if a.facts.edges == 0 {
        return vec![BoundCheck::inapplicable(rule, None, Relation::Le, "no edges")];
    }
    // dim ind(G) < m for m = independence number.
    let m = a.facts.independence_number;
    let h = h_value(a, alpha_for(m)).expect("graph has an edge");
    vec![pd_check(a, rule, Some(format!("m={m}")), Relation::Le, mcondition_bound(a, h), "dim ind(G) < m")]
}

fn lattice_dimension(a: &GraphAnalysis) -> Result<usize, &'static str> {
    match a.graph.coords() {
        None => Err("no lattice coordinates"),
        Some(c) => c.first().map(Vec::len).filter(|&l| l > 0).ok_or("no lattice points"),
    }
}

fn pd_zell(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdZell;
    vec![match lattice_dimension(a) {
        Ok(l) => {
            let n = int(a.n());
            let bound = n - n / int(2 * l + 1);
            pd_check(a, rule, None, Relation::Le, floor(bound), &format!("subgraph of Z^{l}"))
        }
        Err(why) => BoundCheck::inapplicable(rule, None, Relation::Le, why),
    }]
}

fn pd_chromatic(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::PdChromatic;
    if a.facts.edges == 0 {
        return vec![BoundCheck::inapplicable(rule, None, Relation::Le, "no edges")];
    }
    let chi = a.facts.chi_complement;
    let h = h_value(a, alpha_for(chi)).expect("graph has an edge");
    vec![pd_check(a, rule, None, Relation::Le, mcondition_bound(a, h), &format!("chi(G^c) = {chi}"))]
}

fn reg_chromatic(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::RegChromatic;
    let bound = ExtNum::from(a.facts.chi_complement);
    vec![match a.reg() {
        Ok(reg) => BoundCheck::evaluate(rule, None, Relation::Le, bound, ExtNum::from(reg), "any graph"),
        Err(e) => BoundCheck::inapplicable(rule, None, Relation::Le, format!("reg unavailable: {e}")),
    }]
}

fn amalgam(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::Amalgam;
    let (lower, upper) = (Some("lower".to_string()), Some("upper".to_string()));
    match (a.facts.epsilon(), a.facts.tau()) {
        (Some(eps), Some(tau)) => vec![
            pd_check(a, rule, lower, Relation::Ge, n_minus(a, a.facts.idom()), NO_ISOLATED),
            pd_check(a, rule, upper, Relation::Le, n_minus(a, eps.max(tau)), NO_ISOLATED),
        ],
        _ => vec![
            BoundCheck::inapplicable(rule, lower, Relation::Ge, HAS_ISOLATED),
            BoundCheck::inapplicable(rule, upper, Relation::Le, HAS_ISOLATED),
        ],
    }
}

fn me_bound(a: &GraphAnalysis) -> Vec<BoundCheck> {
    a.facts.me.iter().map(|outcome| me_check(a, outcome)).collect()
}

fn me_check(a: &GraphAnalysis, outcome: &MeOutcome) -> BoundCheck {
    let rule = RuleId::MeBound;
    let param = Some(format!("f={}", outcome.f_id));
    let why = match &outcome.class {
        ClassCheck::Certified => None,
        ClassCheck::MissingCertificate { subgraph } => Some(format!("no certificate for G[{subgraph}]")),
        ClassCheck::Condition1Fails { subgraph } => Some(format!("f(G[{subgraph}]) exceeds its order")),
        ClassCheck::Skipped { n } => Some(format!("class check skipped at n = {n}")),
    };
    if let Some(why) = why {
        return BoundCheck::inapplicable(rule, param, Relation::Le, why);
    }
    let bound = match &outcome.certificate {
        Some(cert) => cert.implied_bound(a.n()),
        None => {
            // Edgeless root: the closure check covered f(G) ≤ n via condition (1).
            return pd_check(a, rule, param, Relation::Le, ExtNum::Int(0), "edgeless");
        }
    };
    let bound = match bound {
        ExtNum::Rational(r) => floor(r),
        other => other,
    };
    pd_check(a, rule, param, Relation::Le, bound, "every induced subgraph certified")
}

fn lemma_pdinduct(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::LemmaPdinduct;
    let g = a.graph;
    let table = match &a.table {
        Ok(t) => t,
        Err(e) => return vec![BoundCheck::inapplicable(rule, None, Relation::Le, format!("pd unavailable: {e}"))],
    };
    let all = g.vertices();
    (0..g.n())
        .map(|x| {
            let star = table.pd_within(all - g.closed_neighbors(x)) + g.degree(x);
            let minus = table.pd_within(all.without(x)) + 1;
            BoundCheck::evaluate(
                rule,
                Some(format!("x={x}")),
                Relation::Le,
                ExtNum::from(star.max(minus)),
                ExtNum::from(table.pd()),
                "any vertex",
            )
        })
        .collect()
}

fn lemma_propm(a: &GraphAnalysis) -> Vec<BoundCheck> {
    vec![check_propm(a.graph, a.facts.independence_number + 1)]
}

fn lemma_delete(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let g = a.graph;
    let rule = RuleId::LemmaDelete;
    let mut checks = Vec::new();
    for w in 0..g.n() {
        let applies = g
            .neighbors(w)
            .iter()
            .any(|v| (g.neighbors(v).without(w)).is_subset(g.neighbors(w)));
        if !applies {
            continue;
        }
        let h = g.delete_vertex(w);
        let reason = "N(v) - w within N(w) for a neighbor v";
        checks.push(BoundCheck::evaluate(
            rule,
            Some(format!("w={w},gamma")),
            Relation::Le,
            ExtNum::from(domination::gamma(&h).value),
            ExtNum::from(a.facts.gamma()),
            reason,
        ));
        checks.push(BoundCheck::evaluate(
            rule,
            Some(format!("w={w},idom")),
            Relation::Le,
            ExtNum::from(domination::idom(&h).value),
            ExtNum::from(a.facts.idom()),
            reason,
        ));
    }
    if checks.is_empty() {
        checks.push(BoundCheck::inapplicable(rule, None, Relation::Le, "no edge (v, w) with N(v) - w within N(w)"));
    }
    checks
}

fn dom_gammaind(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::DomGammaind;
    let f = a.facts;
    let mut checks = vec![BoundCheck::evaluate(
        rule,
        Some("gamma<=i".into()),
        Relation::Le,
        ExtNum::from(f.idom()),
        ExtNum::from(f.gamma()),
        "any graph",
    )];
    let tau_param = Some("tau<=gamma".to_string());
    checks.push(match f.tau() {
        Some(tau) => BoundCheck::evaluate(rule, tau_param, Relation::Le, ExtNum::from(f.gamma()), ExtNum::from(tau), NO_ISOLATED),
        None => BoundCheck::inapplicable(rule, tau_param, Relation::Le, HAS_ISOLATED),
    });
    let eps_param = Some("2eps>=gamma0".to_string());
    checks.push(match (f.epsilon(), f.gamma0()) {
        (Some(eps), Some(g0)) => {
            BoundCheck::evaluate(rule, eps_param, Relation::Ge, ExtNum::from(g0), ExtNum::from(2 * eps), NO_ISOLATED)
        }
        _ => BoundCheck::inapplicable(rule, eps_param, Relation::Ge, HAS_ISOLATED),
    });
    checks
}

fn dom_alh(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::DomAlh;
    vec![match (a.facts.gamma0(), large_components(a)) {
        (Some(g0), true) => BoundCheck::evaluate(
            rule,
            None,
            Relation::Le,
            ExtNum::from(a.n()),
            ExtNum::from(a.facts.idom() + g0),
            COMPONENTS_3,
        ),
        (None, _) => BoundCheck::inapplicable(rule, None, Relation::Le, HAS_ISOLATED),
        (Some(_), false) => BoundCheck::inapplicable(rule, None, Relation::Le, SMALL_COMPONENT),
    }]
}

fn i_equals_gamma(a: &GraphAnalysis, rule: RuleId, hypothesis: bool, holds: &str, fails: &str) -> Vec<BoundCheck> {
    vec![if hypothesis {
        BoundCheck::evaluate(rule, None, Relation::Eq, ExtNum::from(a.facts.gamma()), ExtNum::from(a.facts.idom()), holds)
    } else {
        BoundCheck::inapplicable(rule, None, Relation::Eq, fails)
    }]
}

fn long_eq(a: &GraphAnalysis) -> Vec<BoundCheck> {
    i_equals_gamma(a, RuleId::LongEq, a.facts.long, "long", "not long")
}

fn clawfree_eq(a: &GraphAnalysis) -> Vec<BoundCheck> {
    i_equals_gamma(a, RuleId::ClawfreeEq, a.facts.claw_free, "claw-free", "contains a claw")
}

fn hom_pd(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::HomPd;
    vec![match a.pd() {
        Ok(pd) => vanishing(a, rule, None, ExtNum::Int(a.n() as i64 - pd as i64 - 1), "any graph"),
        Err(e) => BoundCheck::inapplicable(rule, None, Relation::Ge, format!("pd unavailable: {e}")),
    }]
}

fn hom_chordal(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::HomChordal;
    vec![if a.facts.chordal {
        vanishing(a, rule, None, ExtNum::Int(a.facts.idom() as i64 - 1), "chordal")
    } else {
        BoundCheck::inapplicable(rule, None, Relation::Ge, "not chordal")
    }]
}

fn hom_from_param(a: &GraphAnalysis, rule: RuleId, value: Option<usize>) -> Vec<BoundCheck> {
    vec![match value {
        Some(v) => vanishing(a, rule, None, ExtNum::Int(v as i64 - 1), NO_ISOLATED),
        None => BoundCheck::inapplicable(rule, None, Relation::Ge, HAS_ISOLATED),
    }]
}

fn hom_epsilon(a: &GraphAnalysis) -> Vec<BoundCheck> {
    hom_from_param(a, RuleId::HomEpsilon, a.facts.epsilon())
}

fn hom_tau(a: &GraphAnalysis) -> Vec<BoundCheck> {
    hom_from_param(a, RuleId::HomTau, a.facts.tau())
}

fn hom_gamma0_half(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::HomGamma0Half;
    vec![match a.facts.gamma0() {
        Some(g0) => vanishing(a, rule, None, ceil(Rational::new(g0 as i64, 2) - 1), NO_ISOLATED),
        None => BoundCheck::inapplicable(rule, None, Relation::Ge, HAS_ISOLATED),
    }]
}

fn hom_k1m(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::HomK1m;
    if a.facts.has_isolated() || a.n() == 0 {
        return vec![BoundCheck::inapplicable(rule, None, Relation::Ge, HAS_ISOLATED)];
    }
    // The bound weakens as m grows, so the least admissible m is used.
    let m = (2..).find(|&m| a.graph.is_k1m_free(m)).expect("degree bounds m");
    let dim = a.facts.independence_number as i64 - 1;
    let m = m as i64;
    let last_vanishing = ceil(Rational::new(dim - 2 * m + 3, m - 1));
    let threshold = match last_vanishing {
        ExtNum::Int(k) => ExtNum::Int(k + 1),
        other => other,
    };
    vec![vanishing(a, rule, Some(format!("m={m}")), threshold, "K_(1,m)-free, no isolated vertices")]
}

/// Greedy maximal set of vertices at pairwise distance at least 3.
pub(crate) fn greedy_distance3_set(g: &crate::Graph) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    let mut blocked = VertexSet::EMPTY;
    for v in 0..g.n() {
        if blocked.contains(v) {
            continue;
        }
        chosen.insert(v);
        let ball1 = g.closed_neighbors(v);
        blocked |= ball1 | g.neighborhood_of(ball1);
    }
    chosen
}

fn hom_dist3(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::HomDist3;
    if !a.facts.connected || a.n() == 0 {
        return vec![BoundCheck::inapplicable(rule, None, Relation::Ge, "not connected")];
    }
    let set = greedy_distance3_set(a.graph);
    vec![vanishing(
        a,
        rule,
        Some(format!("A={set}")),
        ExtNum::Int(set.len() as i64 - 1),
        "connected, A pairwise at distance >= 3",
    )]
}

fn hom_lattice(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::HomLattice;
    vec![match lattice_dimension(a) {
        Ok(l) => {
            let threshold = ceil(Rational::new(a.n() as i64, 2 * l as i64 + 1) - 1);
            vanishing(a, rule, None, threshold, &format!("subgraph of Z^{l}"))
        }
        Err(why) => BoundCheck::inapplicable(rule, None, Relation::Ge, why),
    }]
}

fn hom_mcondition(a: &GraphAnalysis) -> Vec<BoundCheck> {
    let rule = RuleId::HomMcondition;
    if a.facts.edges == 0 {
        return vec![BoundCheck::inapplicable(rule, None, Relation::Ge, "no edges")];
    }
    (1..=a.facts.max_degree)
        .map(|m| {
            let param = Some(format!("m={m}"));
            if !a.graph.is_k1m_free(m + 1) {
                return BoundCheck::inapplicable(rule, param, Relation::Ge, format!("contains an induced K_(1,{})", m + 1));
            }
            let h = h_value(a, alpha_for(m)).expect("graph has an edge");
            vanishing(a, rule, param, ceil(int(a.n()) / h - 1), "K_(1,m+1)-free")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn greedy_distance3_sets_are_separated() {
        let g = path(9);
        let a = greedy_distance3_set(&g);
        assert_eq!(a.to_vec(), vec![0, 3, 6]);
        for u in a {
            for v in a {
                if u < v {
                    assert!(g.distance(u, v).unwrap() >= 3);
                }
            }
        }
        assert_eq!(greedy_distance3_set(&cycle(5)).len(), 1);
    }
}
