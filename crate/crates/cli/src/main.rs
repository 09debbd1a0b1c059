//! `ei`: edge-ideal invariants, bound verification and graph generation.

mod input;
mod render;

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ei_core::bounds::RuleRegistry;
use ei_core::families::{write_edgelist, write_graph6};
use ei_core::homology::Prime;
use ei_core::report::{analyze, GraphReport, SCHEMA_VERSION};
use ei_core::suite::{run_suite, SuiteKind, SuiteOptions};

use input::{FamilyArgs, Format, InputError};

/// Above this many vertices `invariants` refuses to run without `--force`.
const FEASIBILITY_CAP: usize = 16;

const EXIT_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;

#[derive(Parser)]
#[command(name = "ei", version, about = "Edge-ideal invariants of small graphs")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "EI_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute pd, reg, bh, domination parameters and bound checks for one graph.
    Invariants(InvariantsArgs),
    /// Run a verification suite over a seeded corpus.
    Verify(VerifyArgs),
    /// Generate a family member.
    Gen(GenArgs),
}

#[derive(Args)]
struct InvariantsArgs {
    /// Graph file (`-` for stdin); otherwise use --family.
    #[arg(short = 'i', long = "input", conflicts_with = "family")]
    input: Option<PathBuf>,

    #[command(flatten)]
    family: FamilyArgs,

    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Comma-separated characteristics.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    chars: Vec<Prime>,

    #[arg(long)]
    json: bool,

    /// Compute even above the vertex cap.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "paper_golden")]
    suite: SuiteKind,

    #[arg(long)]
    n_max: Option<usize>,

    /// Graphs per size (random) or per corpus (other suites).
    #[arg(long)]
    seeds: Option<usize>,

    #[arg(long, value_delimiter = ',', default_value = "2")]
    chars: Vec<Prime>,

    /// Write the full JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Write the per-rule CSV summary here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArgs,

    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,

    /// Output file (default stdout).
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Serialize)]
struct InvariantReport<'a> {
    schema_version: u32,
    #[serde(flatten)]
    report: &'a GraphReport,
}

#[derive(Debug)]
enum Failure {
    BadInput(anyhow::Error),
    TooLarge(usize),
    Failed(anyhow::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::BadInput(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Failed(e)
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    ExitCode::from(run(std::env::args_os(), &mut io::stdout().lock()))
}

/// Parses `args` and runs the command, writing results to `out`; returns
/// the process exit code.
fn run<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code() as u8;
        }
    };
    if let Some(jobs) = cli.jobs.filter(|&j| j > 0) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    let outcome = match cli.command {
        Command::Invariants(args) => invariants(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Gen(args) => gen(args, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::BadInput(e)) => {
            eprintln!("error: {e:#}");
            EXIT_BAD_INPUT
        }
        Err(Failure::TooLarge(n)) => {
            eprintln!("error: {n} vertices exceed the feasibility cap of {FEASIBILITY_CAP}; pass --force to compute anyway");
            EXIT_TOO_LARGE
        }
        Err(Failure::Failed(e)) => {
            eprintln!("error: {e:#}");
            EXIT_FAILED
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn invariants(args: InvariantsArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let (source, graph) = match &args.input {
        Some(path) => input::read_graph(path, args.format)?,
        None => args.family.graph()?,
    };
    if graph.n() > FEASIBILITY_CAP && !args.force {
        return Err(Failure::TooLarge(graph.n()));
    }
    let report = analyze(source, &graph, &dedup(args.chars), &RuleRegistry::standard());
    let text = if args.json {
        let wrapped = InvariantReport {
            schema_version: SCHEMA_VERSION,
            report: &report,
        };
        serde_json::to_string_pretty(&wrapped).context("serializing report")? + "\n"
    } else {
        render::invariants(&report)
    };
    write_output(None, &text, out)?;
    Ok(0)
}

fn dedup(mut chars: Vec<Prime>) -> Vec<Prime> {
    let mut seen = Vec::new();
    chars.retain(|p| {
        let fresh = !seen.contains(p);
        seen.push(*p);
        fresh
    });
    chars
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let opts = SuiteOptions {
        n_max: args.n_max,
        seeds: args.seeds,
        chars: dedup(args.chars),
    };
    let report = run_suite(args.suite, &opts);
    if let Some(path) = &args.out {
        let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        let mut w = BufWriter::new(file);
        serde_json::to_writer(&mut w, &report).context("serializing report")?;
        w.write_all(b"\n").and_then(|_| w.flush()).context("writing report")?;
    }
    if let Some(path) = &args.csv {
        fs::write(path, report.csv_summary()).with_context(|| format!("writing {}", path.display()))?;
    }
    write_output(None, &render::suite(&report), out)?;
    Ok(if report.passed() { 0 } else { EXIT_FAILED })
}

fn gen(args: GenArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let (_, graph) = args.family.graph()?;
    let text = match args.format {
        Format::Edgelist => write_edgelist(&graph),
        Format::Graph6 => write_graph6(&graph) + "\n",
    };
    write_output(args.output.as_ref(), &text, out)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ei_core::families::parse_edgelist;

    fn ei(args: &[&str]) -> (u8, String) {
        let mut out = Vec::new();
        let code = run(std::iter::once("ei").chain(args.iter().copied()), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    fn file(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.display().to_string()
    }

    fn json(text: &str) -> serde_json::Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn invariants_of_c5() {
        let (code, out) = ei(&["invariants", "--family", "cycle", "--n", "5", "--json"]);
        assert_eq!(code, 0);
        let v = json(&out);
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["characteristics"][0]["hochster"]["pd"], 3);
        let d = &v["facts"]["domination"];
        assert_eq!(d["gamma"]["value"], 2);
        assert_eq!(d["idom"]["value"], 2);
        assert_eq!(v["facts"]["me"][0]["f_id"], "epsilon");
    }

    #[test]
    fn invariants_of_p6_and_k2_file() {
        let (code, out) = ei(&["invariants", "--family", "path", "--n", "6", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(json(&out)["characteristics"][0]["hochster"]["pd"], 4);

        let dir = tempfile::tempdir().unwrap();
        let k2 = file(&dir, "k2.edges", "0 1\n");
        let (code, out) = ei(&["invariants", "-i", &k2, "--json"]);
        assert_eq!(code, 0);
        assert_eq!(json(&out)["characteristics"][0]["hochster"]["pd"], 1);
        let (code, out) = ei(&["invariants", "-i", &k2]);
        assert_eq!(code, 0);
        assert!(out.contains("pd        1"));
    }

    #[test]
    fn json_is_byte_stable() {
        let args = ["invariants", "--family", "random-gnp", "--n", "8", "--seed", "3", "--chars", "2,3", "--json"];
        assert_eq!(ei(&args), ei(&args));
    }

    #[test]
    fn graph6_input_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let c5 = file(&dir, "c5.g6", "Dhc\n");
        let (code, out) = ei(&["invariants", "-i", &c5, "--json"]);
        assert_eq!(code, 0);
        assert_eq!(json(&out)["n"], 5);
    }

    #[test]
    fn bad_input_exits_2() {
        let dir = tempfile::tempdir().unwrap();
        let bad = file(&dir, "bad.edges", "0 1\n1 x\n");
        assert_eq!(ei(&["invariants", "-i", &bad]).0, EXIT_BAD_INPUT);
        let missing = dir.path().join("missing").display().to_string();
        assert_eq!(ei(&["invariants", "-i", &missing]).0, EXIT_BAD_INPUT);
        assert_eq!(ei(&["invariants", "--family", "cycle"]).0, EXIT_BAD_INPUT);
        assert_eq!(ei(&["invariants", "--family", "cycle", "--n", "2"]).0, EXIT_BAD_INPUT);
        assert_eq!(ei(&["invariants", "--family", "nonsense", "--n", "2"]).0, EXIT_BAD_INPUT);
        assert_eq!(ei(&["invariants", "--family", "path", "--n", "3", "--chars", "4"]).0, EXIT_BAD_INPUT);
        assert_eq!(ei(&["gen", "--family", "pentagon-chain", "--n", "0"]).0, EXIT_BAD_INPUT);
        assert_eq!(ei(&["verify", "--suite", "everything"]).0, EXIT_BAD_INPUT);
    }

    #[test]
    fn size_cap_exits_3_unless_forced() {
        let (code, out) = ei(&["invariants", "--family", "path", "--n", "17"]);
        assert_eq!((code, out.as_str()), (EXIT_TOO_LARGE, ""));
        let (code, out) = ei(&["invariants", "--family", "path", "--n", "17", "--force", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(json(&out)["characteristics"][0]["hochster"]["pd"], 11);
    }

    #[test]
    fn verify_writes_reports() {
        let dir = tempfile::tempdir().unwrap();
        let out_json = dir.path().join("r.json");
        let out_csv = dir.path().join("r.csv");
        let (code, text) = ei(&[
            "verify",
            "--suite",
            "chordal",
            "--seeds",
            "6",
            "--n-max",
            "8",
            "--out",
            out_json.to_str().unwrap(),
            "--csv",
            out_csv.to_str().unwrap(),
        ]);
        assert_eq!(code, 0, "{text}");
        assert!(text.ends_with("PASS\n"));
        let v = json(&fs::read_to_string(&out_json).unwrap());
        assert_eq!(v["graph_count"], 6);
        assert!(v["graphs"][0]["characteristics"][0]["checks"].as_array().unwrap().len() > 10);
        let csv = fs::read_to_string(&out_csv).unwrap();
        assert!(csv.starts_with("rule,holds,violated,inapplicable\n"));
        assert!(csv.contains("PD_CHORDAL_EQ,"));
    }

    #[test]
    fn verify_fails_on_golden_mismatch() {
        // The pentagon chain values of the golden table are not attained.
        let (code, text) = ei(&["verify", "--suite", "paper-golden"]);
        assert_eq!(code, EXIT_FAILED);
        assert!(text.contains("FAIL epsilon(pentagon-chain(n=3))"));
    }

    #[test]
    fn gen_writes_both_formats() {
        let (code, out) = ei(&["gen", "--family", "pentagon-chain", "--n", "2"]);
        assert_eq!(code, 0);
        let g = parse_edgelist(&out).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 11));

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t2.g6");
        let (code, out) = ei(&["gen", "--family", "pendant-path", "--n", "2", "--format", "graph6", "-o", path.to_str().unwrap()]);
        assert_eq!((code, out.as_str()), (0, ""));
        let text = fs::read_to_string(&path).unwrap();
        let g = ei_core::families::parse_graph6(&text).unwrap();
        assert_eq!(g.n(), 10);
    }

    #[test]
    fn gen_lattice_from_coordinates() {
        let dir = tempfile::tempdir().unwrap();
        let coords = file(&dir, "pts.txt", "0 0\n0 1\n1 1\n3 3\n");
        let (code, out) = ei(&["gen", "--family", "lattice", "--coords", &coords]);
        assert_eq!(code, 0);
        let g = parse_edgelist(&out).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 2));
    }
}
