//! Graph sources: files in either supported format, or a named family.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use thiserror::Error;

use ei_core::families::{
    generate, parse_coordinates, parse_edgelist, parse_graph6, FamilyError, FamilyKind, FamilySpec, FormatError,
    Probability,
};
use ei_core::Graph;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("reading {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Missing(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Named family to build instead of reading a file.
    #[arg(long)]
    pub family: Option<FamilyKind>,

    /// Size parameter (vertices, pentagons, pendant blocks or one bipartite side).
    #[arg(long)]
    pub n: Option<usize>,

    /// Other side of a complete bipartite graph.
    #[arg(long)]
    pub m: Option<usize>,

    /// Edge probability, as `num/den` or an integer.
    #[arg(long, default_value = "1/2")]
    pub p: Probability,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Lattice point file for `--family lattice`.
    #[arg(long)]
    pub coords: Option<PathBuf>,

    #[arg(long, default_value_t = 2)]
    pub dim: usize,

    #[arg(long, default_value_t = 4)]
    pub side: i64,

    /// Number of lattice points for `random-lattice` (default: --n).
    #[arg(long)]
    pub count: Option<usize>,
}

impl FamilyArgs {
    pub fn spec(&self) -> Result<FamilySpec, InputError> {
        let kind = self
            .family
            .ok_or_else(|| InputError::Missing("give an input file with -i or a family with --family".into()))?;
        let n = || {
            self.n
                .ok_or_else(|| InputError::Missing(format!("--family {kind} needs --n")))
        };
        Ok(match kind {
            FamilyKind::Path => FamilySpec::Path { n: n()? },
            FamilyKind::Cycle => FamilySpec::Cycle { n: n()? },
            FamilyKind::Complete => FamilySpec::Complete { n: n()? },
            FamilyKind::CompleteBipartite => {
                let n = n()?;
                FamilySpec::CompleteBipartite { m: self.m.unwrap_or(n), n }
            }
            FamilyKind::PentagonChain => FamilySpec::PentagonChain { n: n()? },
            FamilyKind::PendantPath => FamilySpec::PendantPath { n: n()? },
            FamilyKind::Figure1Tree => FamilySpec::Figure1Tree,
            FamilyKind::Lattice => {
                let path = self
                    .coords
                    .as_ref()
                    .ok_or_else(|| InputError::Missing("--family lattice needs --coords FILE".into()))?;
                let text = read_text(path)?;
                let coords = parse_coordinates(&text).map_err(|source| InputError::Format {
                    path: path.display().to_string(),
                    source,
                })?;
                FamilySpec::Lattice { coords }
            }
            FamilyKind::RandomGnp => FamilySpec::RandomGnp {
                n: n()?,
                p: self.p,
                seed: self.seed,
            },
            FamilyKind::RandomChordal => FamilySpec::RandomChordal {
                n: n()?,
                seed: self.seed,
            },
            FamilyKind::RandomLong => FamilySpec::RandomLong {
                n: n()?,
                p: self.p,
                seed: self.seed,
            },
            FamilyKind::RandomLattice => FamilySpec::RandomLattice {
                dim: self.dim,
                side: self.side,
                count: match self.count {
                    Some(c) => c,
                    None => n()?,
                },
                seed: self.seed,
            },
        })
    }

    /// The family member and its label.
    pub fn graph(&self) -> Result<(String, Graph), InputError> {
        let spec = self.spec()?;
        Ok((spec.label(), generate(&spec)?))
    }
}

fn read_text(path: &Path) -> Result<String, InputError> {
    let io_err = |source| InputError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

/// Guesses the format from the first meaningful line: graph6 is a single
/// token, edge lists always have two.
pub fn detect(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if !line.contains(char::is_whitespace) => Format::Graph6,
        _ => Format::Edgelist,
    }
}

pub fn read_graph(path: &Path, format: Option<Format>) -> Result<(String, Graph), InputError> {
    let text = read_text(path)?;
    let source = if path == Path::new("-") {
        "stdin".to_string()
    } else {
        path.display().to_string()
    };
    let parsed = match format.unwrap_or_else(|| detect(&text)) {
        Format::Edgelist => parse_edgelist(&text),
        Format::Graph6 => {
            // A graph6 file may list several graphs; only the first is read.
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            parse_graph6(line)
        }
    };
    let graph = parsed.map_err(|e| InputError::Format {
        path: source.clone(),
        source: e,
    })?;
    Ok((source, graph))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_formats() {
        assert_eq!(detect("Dhc\n"), Format::Graph6);
        assert_eq!(detect(">>graph6<<Dhc"), Format::Graph6);
        assert_eq!(detect("# comment\n0 1\n"), Format::Edgelist);
        assert_eq!(detect("n 3\n"), Format::Edgelist);
        assert_eq!(detect(""), Format::Edgelist);
    }

    fn family(kind: Option<FamilyKind>, n: Option<usize>) -> FamilyArgs {
        FamilyArgs {
            family: kind,
            n,
            m: None,
            p: Probability::HALF,
            seed: 0,
            coords: None,
            dim: 2,
            side: 4,
            count: None,
        }
    }

    #[test]
    fn family_specs_need_their_parameters() {
        assert!(matches!(family(Some(FamilyKind::Cycle), None).spec(), Err(InputError::Missing(_))));
        assert_eq!(family(Some(FamilyKind::Cycle), Some(5)).spec().unwrap(), FamilySpec::Cycle { n: 5 });
        assert!(matches!(family(None, Some(5)).spec(), Err(InputError::Missing(_))));
        assert!(matches!(family(Some(FamilyKind::Lattice), None).spec(), Err(InputError::Missing(_))));
    }

    #[test]
    fn bipartite_defaults_to_balanced() {
        assert_eq!(
            family(Some(FamilyKind::CompleteBipartite), Some(3)).spec().unwrap(),
            FamilySpec::CompleteBipartite { m: 3, n: 3 }
        );
    }

    #[test]
    fn random_lattice_count_falls_back_to_n() {
        let spec = family(Some(FamilyKind::RandomLattice), Some(7)).spec().unwrap();
        assert!(matches!(spec, FamilySpec::RandomLattice { count: 7, .. }));
    }
}
