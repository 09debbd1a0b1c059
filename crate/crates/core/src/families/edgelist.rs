use std::fmt::Write as _;

use super::FormatError;
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

/// Parses the plain edge-list format: one `u v` pair per line, `#` starts a
/// comment, blank lines are skipped. An optional `n <count>` line fixes the
/// vertex count; otherwise it is one more than the largest index seen.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_seen: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parse_err = |message: String| FormatError::Parse { line, message };
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(format!("'{s}' is not a vertex index")))
        };
        match fields.as_slice() {
            ["n", count] => {
                if declared.is_some() {
                    return Err(parse_err("duplicate 'n' header".into()));
                }
                let count = num(count)?;
                if count > MAX_VERTICES {
                    return Err(parse_err(format!(
                        "{count} vertices exceed the cap of {MAX_VERTICES}"
                    )));
                }
                declared = Some(count);
            }
            [a, b] => {
                let (u, v) = (num(a)?, num(b)?);
                if u == v {
                    return Err(FormatError::LoopEdge { line, vertex: u });
                }
                let hi = u.max(v);
                if hi >= MAX_VERTICES {
                    return Err(parse_err(format!("vertex {hi} exceeds the cap of {MAX_VERTICES}")));
                }
                if let Some(n) = declared {
                    if hi >= n {
                        return Err(parse_err(format!("vertex {hi} out of range for n = {n}")));
                    }
                }
                max_seen = max_seen.max(Some(hi));
                edges.push((u, v));
            }
            _ => return Err(parse_err(format!("expected 'u v' or 'n <count>', got '{content}'"))),
        }
    }

    let n = match declared {
        Some(n) => {
            if let Some(hi) = max_seen.filter(|&hi| hi >= n) {
                return Err(FormatError::Parse {
                    line: 0,
                    message: format!("vertex {hi} out of range for n = {n}"),
                });
            }
            n
        }
        None => max_seen.map_or(0, |hi| hi + 1),
    };
    Ok(Graph::from_edges(n, &edges)?)
}

/// Writes the header `n <count>` followed by every edge `u v` with `u < v`,
/// in lexicographic order.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses a coordinate file: one lattice point per line as whitespace- or
/// comma-separated integers. `#` comments and blank lines are skipped.
pub fn parse_coordinates(text: &str) -> Result<Vec<Vec<i64>>, FormatError> {
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let point = content
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i64>().map_err(|_| FormatError::Parse {
                    line: idx + 1,
                    message: format!("'{s}' is not an integer"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        points.push(point);
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, pentagon_chain};

    #[test]
    fn parses_examples() {
        assert_eq!(parse_edgelist("0 1\n1 2").unwrap(), path(3));
        let g = parse_edgelist("n 3\n0 1").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 1));
        assert_eq!(g.isolated_vertices().to_vec(), vec![2]);
        assert_eq!(
            parse_edgelist("0 0"),
            Err(FormatError::LoopEdge { line: 1, vertex: 0 })
        );
    }

    #[test]
    fn comments_blank_lines_and_duplicates() {
        let text = "# a triangle\n\n0 1 # first\n1 2\n2 0\n1 0\n";
        let g = parse_edgelist(text).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
        assert_eq!(parse_edgelist("").unwrap().n(), 0);
    }

    #[test]
    fn reports_line_numbers() {
        match parse_edgelist("0 1\n\n1 x\n") {
            Err(FormatError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edgelist("0 1 2"), Err(FormatError::Parse { line: 1, .. })));
        assert!(matches!(parse_edgelist("n 2\n0 5"), Err(FormatError::Parse { line: 2, .. })));
        assert!(parse_edgelist("0 64").is_err());
    }

    #[test]
    fn round_trip() {
        for g in [path(1), cycle(5), pentagon_chain(3), Graph::empty(4).unwrap()] {
            assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
        }
    }

    #[test]
    fn coordinates() {
        let pts = parse_coordinates("0 0\n0,1\n# skip\n  1  1 \n").unwrap();
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert!(parse_coordinates("0 a").is_err());
    }
}
