//! Acceptance gate. Each test prints one `criterion N: PASS|FAIL` line and
//! fails when its criterion is not met.

use std::cmp::Ordering;
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use ei_core::bounds::me::EpsilonFn;
use ei_core::bounds::{replay, search_me_certificate, ExtNum, RuleId, DEFAULT_DEPTH_CAP};
use ei_core::domination::{self, Param};
use ei_core::families::{
    complete, complete_bipartite, cycle, figure1_tree, path, pendant_path, pentagon_chain,
};
use ei_core::hochster::{big_height, pd_reg};
use ei_core::homology::{betti_numbers, IndependenceComplex, Prime};
use ei_core::suite::{corpus, run_suite, SuiteKind, SuiteOptions};
use ei_core::Graph;
use ei_testkit as oracle;

/// Exact integer invariants: no tolerance.
const EXACT: i64 = 0;
const GOLDEN_PER_GRAPH_LIMIT: Duration = Duration::from_secs(10);
const INEQUALITY_SUITE_LIMIT: Duration = Duration::from_secs(600);
const ORACLE_CORPUS_SIZE: usize = 500;
const ORACLE_MAX_N: usize = 8;

fn report(criterion: u32, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {criterion}: PASS");
    } else {
        println!("criterion {criterion}: FAIL ({} problems)", failures.len());
        for f in failures.iter().take(20) {
            println!("  {f}");
        }
        panic!("criterion {criterion} failed: {}", failures.join("; "));
    }
}

fn expect(failures: &mut Vec<String>, what: String, expected: i64, actual: i64) {
    if (expected - actual).abs() > EXACT {
        failures.push(format!("{what}: expected {expected}, got {actual}"));
    }
}

fn feasible<T>(p: Param<T>, f: impl Fn(&T) -> usize) -> i64 {
    p.feasible().map_or(-1, |t| f(t) as i64)
}

/// Runs `check` on `g` and records it as a failure if it exceeds the per-graph limit.
fn timed(fails: &mut Vec<String>, name: String, g: &Graph, check: impl FnOnce(&Graph, &mut Vec<String>)) {
    let start = Instant::now();
    check(g, fails);
    if start.elapsed() > GOLDEN_PER_GRAPH_LIMIT {
        fails.push(format!("{name}: took {:?}", start.elapsed()));
    }
}

fn pd(g: &Graph, p: Prime) -> usize {
    pd_reg(g, p).expect("within budget").pd
}

#[test]
fn criterion_1_golden_values() {
    let mut fails = Vec::new();
    let ceil = |a: usize, b: usize| a.div_ceil(b) as i64;

    for n in 2..=12 {
        timed(&mut fails, format!("P{n}"), &path(n), |g, f| {
            expect(f, format!("pd(P{n})"), (2 * n / 3) as i64, pd(g, Prime::TWO) as i64);
            expect(f, format!("i(P{n})"), ceil(n, 3), domination::idom(g).value as i64);
            if n >= 3 {
                expect(f, format!("tau(P{n})"), ceil(n, 3), feasible(domination::tau(g), |t| t.value));
            }
        });
    }
    for n in 3..=12 {
        timed(&mut fails, format!("C{n}"), &cycle(n), |g, f| {
            expect(f, format!("pd(C{n})"), ceil(2 * n - 1, 3), pd(g, Prime::TWO) as i64);
            expect(f, format!("i(C{n})"), ceil(n, 3), domination::idom(g).value as i64);
            expect(f, format!("gamma(C{n})"), ceil(n, 3), domination::gamma(g).value as i64);
            expect(f, format!("eps(C{n})"), ceil(n, 4), feasible(domination::epsilon(g), |e| e.value));
            expect(f, format!("tau(C{n})"), (n / 3) as i64, feasible(domination::tau(g), |t| t.value));
        });
    }
    expect(&mut fails, "pd(C4)".into(), 3, pd(&cycle(4), Prime::TWO) as i64);
    for d in 1..=4 {
        let g = complete_bipartite(d, d);
        expect(&mut fails, format!("pd(K{d},{d})"), 2 * d as i64 - 1, pd(&g, Prime::TWO) as i64);
    }
    for n in 2..=8 {
        expect(&mut fails, format!("pd(K{n})"), n as i64 - 1, pd(&complete(n), Prime::TWO) as i64);
    }
    expect(&mut fails, "eps(C5)".into(), 2, feasible(domination::epsilon(&cycle(5)), |e| e.value));
    expect(&mut fails, "tau(C5)".into(), 1, feasible(domination::tau(&cycle(5)), |t| t.value));
    expect(&mut fails, "eps(P4)".into(), 1, feasible(domination::epsilon(&path(4)), |e| e.value));
    expect(&mut fails, "tau(P4)".into(), 2, feasible(domination::tau(&path(4)), |t| t.value));
    for n in 1..=3 {
        timed(&mut fails, format!("Q{n}"), &pentagon_chain(n), |g, f| {
            expect(f, format!("eps(Q{n})"), 2 * n as i64 - 1, feasible(domination::epsilon(g), |e| e.value));
            expect(f, format!("tau(Q{n})"), n as i64, feasible(domination::tau(g), |t| t.value));
        });
    }
    for n in 1..=2 {
        timed(&mut fails, format!("T{n}"), &pendant_path(n), |g, f| {
            expect(f, format!("eps(T{n})"), n as i64, feasible(domination::epsilon(g), |e| e.value));
            let tau = feasible(domination::tau(g), |t| t.value);
            if tau < 2 * n as i64 {
                f.push(format!("tau(T{n}): expected at least {}, got {tau}", 2 * n));
            }
        });
    }
    let tree = figure1_tree();
    expect(&mut fails, "i(figure1 tree)".into(), 3, domination::idom(&tree).value as i64);
    expect(&mut fails, "gamma(figure1 tree)".into(), 3, domination::gamma(&tree).value as i64);
    report(1, &fails);
}

#[test]
fn criterion_2_inequality_suite() {
    let opts = SuiteOptions {
        n_max: Some(10),
        seeds: Some(200),
        chars: vec![Prime::TWO, Prime::THREE],
    };
    let start = Instant::now();
    let r = run_suite(SuiteKind::Random, &opts);
    let elapsed = start.elapsed();
    let mut fails = Vec::new();
    if r.graph_count != 7 * 200 {
        fails.push(format!("expected 1400 graphs, got {}", r.graph_count));
    }
    for v in &r.violations {
        fails.push(format!("{} p={}: {} actual {} bound {}", v.graph, v.p, v.check.label(), v.check.actual, v.check.bound));
    }
    // These must actually be exercised, not just vacuously inapplicable.
    for rule in [
        RuleId::Amalgam,
        RuleId::PdLowerGamma0,
        RuleId::RegChromatic,
        RuleId::LemmaPdinduct,
        RuleId::DomAlh,
    ] {
        let holds = r.rule_summary.get(&rule).map_or(0, |t| t.holds);
        if holds == 0 {
            fails.push(format!("{rule} never applied"));
        }
    }
    if elapsed > INEQUALITY_SUITE_LIMIT {
        fails.push(format!("took {elapsed:?}"));
    }
    report(2, &fails);
}

#[test]
fn criterion_3_chordal_equality() {
    let opts = SuiteOptions {
        n_max: Some(12),
        seeds: Some(100),
        chars: vec![Prime::TWO, Prime::THREE],
    };
    let entries = corpus(SuiteKind::Chordal, &opts);
    let mut fails = Vec::new();
    if entries.len() != 100 {
        fails.push(format!("expected 100 graphs, got {}", entries.len()));
    }
    for e in &entries {
        let g = &e.graph;
        if !g.is_chordal() || g.n() > 12 {
            fails.push(format!("{}: not a chordal graph on at most 12 vertices", e.label));
        }
        let n_minus_i = (g.n() - domination::idom(g).value) as i64;
        let bh = big_height(g) as i64;
        let pds: Vec<usize> = opts.chars.iter().map(|&p| pd(g, p)).collect();
        for (p, &v) in opts.chars.iter().zip(&pds) {
            expect(&mut fails, format!("{} pd vs n-i at p={p}", e.label), n_minus_i, v as i64);
            expect(&mut fails, format!("{} pd vs bh at p={p}", e.label), bh, v as i64);
        }
        if pds.windows(2).any(|w| w[0] != w[1]) {
            fails.push(format!("{}: pd differs across characteristics {pds:?}", e.label));
        }
    }
    report(3, &fails);
}

#[test]
fn criterion_4_long_graph_equality() {
    let entries = corpus(SuiteKind::Long, &SuiteOptions::default());
    let pruned = entries.iter().filter(|e| e.label.starts_with("pruned-long")).count();
    let subdivided = entries.iter().filter(|e| e.label.starts_with("subdivided")).count();
    let mut fails = Vec::new();
    if (pruned, subdivided) != (100, 50) {
        fails.push(format!("expected 100 + 50 graphs, got {pruned} + {subdivided}"));
    }
    for e in &entries {
        if !e.graph.is_long() {
            fails.push(format!("{}: not long", e.label));
        }
        let i = domination::idom(&e.graph).value as i64;
        let gamma = domination::gamma(&e.graph).value as i64;
        expect(&mut fails, format!("{} i vs gamma", e.label), gamma, i);
    }
    report(4, &fails);
}

#[test]
fn criterion_5_oracle_equivalence() {
    let graphs = oracle::small_corpus(ORACLE_CORPUS_SIZE, ORACLE_MAX_N);
    let mut fails = Vec::new();
    for (idx, g) in graphs.iter().enumerate() {
        let name = |what: &str| format!("graph {idx} {what}");
        let opt = |v: Option<usize>| v.map_or(-1, |x| x as i64);
        expect(&mut fails, name("gamma"), oracle::gamma(g) as i64, domination::gamma(g).value as i64);
        expect(&mut fails, name("i"), oracle::idom(g) as i64, domination::idom(g).value as i64);
        expect(&mut fails, name("gamma0"), opt(oracle::gamma0(g)), feasible(domination::gamma0(g), |s| s.value));
        expect(&mut fails, name("tau"), opt(oracle::tau(g)), feasible(domination::tau(g), |s| s.value));
        expect(&mut fails, name("eps"), opt(oracle::epsilon(g)), feasible(domination::epsilon(g), |s| s.value));
        let gc = g.complement();
        expect(
            &mut fails,
            name("chi"),
            oracle::chromatic_number(&gc) as i64,
            domination::chromatic_number(&gc) as i64,
        );

        let c = IndependenceComplex::build(g).expect("small complex");
        let f_alt: i64 = c
            .f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum();
        for p in [2u32, 3] {
            let prime = Prime::new(p as u64).unwrap();
            let fast = betti_numbers(&c, prime);
            if fast.betti != oracle::betti(g, g.vertices(), p) {
                fails.push(name(&format!("betti at p={p}")));
            }
            expect(&mut fails, name(&format!("euler at p={p}")), f_alt, fast.euler_characteristic());
            for k in 1..=c.dim() {
                let upper = c.boundary_rows(k, prime);
                let lower = c.boundary_rows(k - 1, prime);
                let width = c.faces(k - 2).len();
                for row in &upper {
                    let mut acc = vec![0u64; width];
                    for &(mid, a) in row {
                        for &(low, b) in &lower[mid as usize] {
                            acc[low as usize] = (acc[low as usize] + a as u64 * b as u64) % p as u64;
                        }
                    }
                    if acc.iter().any(|&x| x != 0) {
                        fails.push(name(&format!("boundary squared nonzero at k={k}, p={p}")));
                    }
                }
            }
        }
    }
    report(5, &fails);
}

#[test]
fn criterion_6_me_certificates() {
    let f = EpsilonFn;
    let mut fails = Vec::new();
    let mut checked = 0;
    for e in corpus(SuiteKind::All, &SuiteOptions::default()) {
        let g = &e.graph;
        if g.edge_count() == 0 {
            continue;
        }
        checked += 1;
        let Some(cert) = search_me_certificate(g, &f, DEFAULT_DEPTH_CAP) else {
            fails.push(format!("{}: no certificate", e.label));
            continue;
        };
        if let Err(why) = replay(g, &cert, &f) {
            fails.push(format!("{}: replay failed: {why}", e.label));
        }
        let actual = ExtNum::from(pd(g, Prime::TWO));
        let bound = cert.implied_bound(g.n());
        if !matches!(bound.compare(actual), Some(Ordering::Greater | Ordering::Equal)) {
            fails.push(format!("{}: bound {bound} below pd {actual}", e.label));
        }
    }
    if checked == 0 {
        fails.push("no graphs with edges".into());
    }
    report(6, &fails);
}

#[test]
fn criterion_7_lattice_bound() {
    let entries = corpus(SuiteKind::Lattice, &SuiteOptions::default());
    let mut fails = Vec::new();
    if entries.len() != 50 {
        fails.push(format!("expected 50 graphs, got {}", entries.len()));
    }
    for e in &entries {
        let g = &e.graph;
        if g.n() > 12 || g.coords().is_none() {
            fails.push(format!("{}: not a lattice graph on at most 12 vertices", e.label));
        }
        let bound = 4 * g.n() / 5;
        let actual = pd(g, Prime::TWO);
        if actual > bound {
            fails.push(format!("{}: pd {actual} exceeds {bound}", e.label));
        }
    }
    let r = run_suite(SuiteKind::Lattice, &SuiteOptions::default());
    let zell = r.rule_summary.get(&RuleId::PdZell).cloned().unwrap_or_default();
    if zell.violated > 0 || zell.holds != entries.len() {
        fails.push(format!("lattice rule tally {zell:?}"));
    }
    report(7, &fails);
}

#[test]
fn criterion_8_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str| {
        let out = dir.path().join(format!("jobs{jobs}.json"));
        let output = Command::new(env!("CARGO_BIN_EXE_ei"))
            .args(["verify", "--suite", "all", "--jobs", jobs, "--out"])
            .arg(&out)
            .env_remove("EI_JOBS")
            .output()
            .expect("run ei");
        // Exit status reflects verdicts; only the report bytes matter here.
        assert!(output.status.code().is_some_and(|c| c <= 1), "{output:?}");
        fs::read(out).expect("report written")
    };
    let one = run("1");
    let eight = run("8");
    let mut fails = Vec::new();
    if one.is_empty() {
        fails.push("empty report".into());
    }
    if one != eight {
        fails.push("reports differ between --jobs 1 and --jobs 8".into());
    }
    report(8, &fails);
}
