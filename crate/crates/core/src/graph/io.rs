use std::collections::HashSet;
use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(text: &str, line: usize, what: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, format!("malformed {what}: expected two integers")))?;
        tok.parse::<usize>().map_err(|_| {
            parse_err(
                line,
                format!("malformed {what}: `{tok}` is not a non-negative integer"),
            )
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(
            line,
            format!("malformed {what}: trailing tokens"),
        ));
    }
    Ok((a, b))
}

/// Parses the edge-list format.
///
/// The first significant line is `n m`; it is followed by exactly `m` lines
/// `u v`. Lines whose first non-blank character is `#` are comments, and
/// blank lines are ignored. Errors carry the 1-based line number.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let (n, m) = parse_pair(header, hline, "header")?;

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let (lno, text) = lines.next().ok_or_else(|| {
            parse_err(
                last_line,
                format!("expected {m} edges, found {}", edges.len()),
            )
        })?;
        last_line = lno;
        let (u, v) = parse_pair(text, lno, "edge")?;
        if u >= n || v >= n {
            return Err(parse_err(
                lno,
                format!("edge endpoint {} >= n = {n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(parse_err(lno, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(lno, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(lno, format!("more than the declared {m} edges")));
    }
    Graph::from_edges(n, edges).map_err(|e| parse_err(hline, e.to_string()))
}

/// Serializes in the edge-list format, preceded by `# `-prefixed comment lines.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges().iter() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Graphviz `graph { }` text; members of `highlight` are filled.
pub fn export_dot(g: &Graph, highlight: &VertexSet) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        if highlight.contains(v) {
            let _ = writeln!(
                out,
                "  {v} [style=filled, fillcolor=black, fontcolor=white];"
            );
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges().iter() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cycle, path};

    #[test]
    fn parses_examples() {
        let g = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g, path(3));
        let k1 = parse_graph("1 0").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let iso = parse_graph("# isolated vertices kept\n5 1\n\n0 4\n").unwrap();
        assert_eq!(iso.n(), 5);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_graph("2 1\n0 0").unwrap_err();
        assert!(
            matches!(err, Error::Parse { line: 2, ref message } if message.contains("self-loop"))
        );
        assert!(matches!(
            parse_graph("x 1\n0 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n0 3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n# c\n1 0"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(parse_graph("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("3 1\n0 1\n1 2"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5);
        let text = write_edge_list(&g, &["cycle 5".into()]);
        assert!(text.starts_with("# cycle 5\n5 5\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn dot_examples() {
        let k1 = export_dot(&Graph::empty(1), &VertexSet::new(1));
        assert_eq!(k1, "graph G {\n  0;\n}\n");
        let p3 = export_dot(&path(3), &VertexSet::from_vertices(3, [0, 2]).unwrap());
        assert_eq!(p3.matches("filled").count(), 2);
        assert!(p3.contains("0 -- 1;") && p3.contains("1 -- 2;"));
        let c4 = export_dot(&cycle(4), &VertexSet::full(4));
        assert_eq!(c4.matches("filled").count(), 4);
    }
}
