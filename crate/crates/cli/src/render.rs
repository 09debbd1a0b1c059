//! Plain-text output.

use std::fmt::Write as _;

use ei_core::bounds::{ClassCheck, Verdict};
use ei_core::domination::Param;
use ei_core::report::GraphReport;
use ei_core::suite::SuiteReport;

fn param<T>(p: &Param<T>, value: impl Fn(&T) -> String) -> String {
    match p.feasible() {
        Some(t) => value(t),
        None => "undefined (isolated vertices)".into(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn invariants(r: &GraphReport) -> String {
    let mut s = String::new();
    let f = &r.facts;
    let d = &f.domination;
    writeln!(s, "graph     {}", r.source).unwrap();
    writeln!(s, "n, |E|    {}, {}", r.n, r.edges).unwrap();
    writeln!(s, "graph6    {}", r.graph6).unwrap();
    writeln!(s, "dim ind   {}", r.dim_ind).unwrap();
    writeln!(s, "bh        {}", f.bh).unwrap();
    writeln!(s, "gamma     {}  {}", d.gamma.value, d.gamma.witness).unwrap();
    writeln!(s, "i         {}  {}", d.idom.value, d.idom.witness).unwrap();
    writeln!(s, "gamma0    {}", param(&d.gamma0, |x| format!("{}  {}", x.value, x.witness))).unwrap();
    writeln!(s, "tau       {}", param(&d.tau, |x| format!("{}  independent {}", x.value, x.independent))).unwrap();
    writeln!(s, "epsilon   {}", param(&d.epsilon, |x| format!("{}  {:?}", x.value, x.witness))).unwrap();
    writeln!(s, "chi(G^c)  {}", f.chi_complement).unwrap();
    writeln!(
        s,
        "classes   chordal {}, long {}, claw-free {}, connected {}",
        yes_no(f.chordal),
        yes_no(f.long),
        yes_no(f.claw_free),
        yes_no(f.connected)
    )
    .unwrap();
    for me in &f.me {
        let class = match &me.class {
            ClassCheck::Certified => "class certified".to_string(),
            ClassCheck::MissingCertificate { subgraph } => format!("no certificate for G[{subgraph}]"),
            ClassCheck::Condition1Fails { subgraph } => format!("f too large on edgeless G[{subgraph}]"),
            ClassCheck::Skipped { n } => format!("class check skipped (n = {n})"),
        };
        match &me.certificate {
            Some(c) => writeln!(
                s,
                "ME {:<9} f = {}, sequence {:?}, bound {}; {class}",
                me.f_id,
                c.f_value,
                c.sequence,
                c.implied_bound(r.n)
            )
            .unwrap(),
            None => writeln!(s, "ME {:<9} no certificate; {class}", me.f_id).unwrap(),
        }
    }

    for c in &r.characteristics {
        writeln!(s, "\n-- characteristic {} --", c.p).unwrap();
        if let Some(h) = &c.hochster {
            writeln!(s, "pd        {}  (W = {}, k = {})", h.pd, h.pd_witness.w, h.pd_witness.k).unwrap();
            writeln!(s, "reg       {}  (W = {}, k = {})", h.reg, h.reg_witness.w, h.reg_witness.k).unwrap();
        }
        if let Some(b) = &c.betti {
            writeln!(s, "betti     {b:?}  (degrees -1, 0, 1, ...)").unwrap();
        }
        if let Some(e) = &c.error {
            writeln!(s, "error     {e}").unwrap();
        }
        let width = c.checks.iter().map(|b| b.label().len()).max().unwrap_or(0);
        for b in &c.checks {
            let verdict = match b.verdict {
                Verdict::Holds => "ok",
                Verdict::Violated => "VIOLATED",
                Verdict::Inapplicable => "n/a",
            };
            if b.hypothesis_met {
                writeln!(
                    s,
                    "  {:<width$}  {} {} {}  {verdict}",
                    b.label(),
                    b.actual,
                    b.relation.symbol(),
                    b.bound
                )
                .unwrap();
            } else {
                writeln!(s, "  {:<width$}  {verdict}: {}", b.label(), b.reason).unwrap();
            }
        }
    }
    for dis in &r.characteristic_disagreements {
        writeln!(s, "\n{} depends on the characteristic: {:?}", dis.invariant, dis.values).unwrap();
    }
    s
}

pub fn suite(r: &SuiteReport) -> String {
    let mut s = String::new();
    writeln!(s, "suite {} over {} graphs", r.suite, r.graph_count).unwrap();
    let width = r.rule_summary.keys().map(|k| k.to_string().len()).max().unwrap_or(4);
    writeln!(s, "{:<width$}  {:>6} {:>8} {:>12}", "rule", "holds", "violated", "inapplicable").unwrap();
    for (rule, t) in &r.rule_summary {
        writeln!(
            s,
            "{:<width$}  {:>6} {:>8} {:>12}",
            rule.to_string(),
            t.holds,
            t.violated,
            t.inapplicable
        )
        .unwrap();
    }
    if !r.golden.is_empty() {
        let failed: Vec<_> = r.golden_failures().collect();
        writeln!(s, "\ngolden values: {} checked, {} failed", r.golden.len(), failed.len()).unwrap();
        for g in failed {
            writeln!(s, "  FAIL {}: expected {}, got {}", g.name, g.expected, g.actual).unwrap();
        }
    }
    for v in &r.violations {
        writeln!(
            s,
            "VIOLATION {} (p = {}): {} actual {} bound {} edges {:?}",
            v.graph,
            v.p,
            v.check.label(),
            v.check.actual,
            v.check.bound,
            v.edges
        )
        .unwrap();
    }
    for (graph, ds) in &r.characteristic_disagreements {
        for d in ds {
            writeln!(s, "{graph}: {} differs across characteristics {:?}", d.invariant, d.values).unwrap();
        }
    }
    writeln!(s, "{}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
    s
}
