use std::fs;
use std::io::{self, Read};
use std::path::Path;

use vislab_core::graph::parse_graph;
use vislab_core::{Error, Graph, VertexSet};

/// A parsed graph plus the product dimensions recorded in its comments.
pub struct Loaded {
    pub graph: Graph,
    pub product: Option<Vec<usize>>,
}

/// Reads from `path`, or standard input when `path` is absent or `-`.
pub fn read_source(path: Option<&Path>) -> io::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p),
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

pub fn load(path: Option<&Path>) -> Result<Loaded, String> {
    let text = read_source(path).map_err(|e| format!("cannot read graph: {e}"))?;
    let graph = parse_graph(&text).map_err(|e| e.to_string())?;
    let product = product_dims(&text)?;
    if let Some(dims) = &product {
        if dims.iter().product::<usize>() != graph.n() {
            return Err(format!(
                "product metadata {dims:?} does not match {} vertices",
                graph.n()
            ));
        }
    }
    Ok(Loaded { graph, product })
}

/// Looks for a `# product d1 d2 ...` comment.
fn product_dims(text: &str) -> Result<Option<Vec<usize>>, String> {
    for line in text.lines() {
        let Some(rest) = line.trim().strip_prefix('#') else {
            continue;
        };
        let mut words = rest.split_whitespace();
        if words.next() != Some("product") {
            continue;
        }
        let dims = words
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| format!("bad product dimension `{w}`"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Some(dims));
    }
    Ok(None)
}

pub fn product_comment(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(usize::to_string).collect();
    format!("product {}", parts.join(" "))
}

/// 1-based coordinates of a row-major product vertex.
pub fn coordinates(mut v: usize, dims: &[usize]) -> String {
    let mut coords = vec![0; dims.len()];
    for (slot, &d) in coords.iter_mut().zip(dims).rev() {
        *slot = v % d + 1;
        v /= d;
    }
    let parts: Vec<String> = coords.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn describe_set(set: &VertexSet, product: Option<&[usize]>) -> String {
    let ids = if set.is_empty() {
        "{}".to_string()
    } else {
        set.to_string()
    };
    match product {
        Some(dims) if !set.is_empty() => {
            let coords: Vec<String> = set.iter().map(|v| coordinates(v, dims)).collect();
            format!("{ids} {}", coords.join(" "))
        }
        _ => ids,
    }
}

pub fn parse_set(text: &str, n: usize) -> Result<VertexSet, Error> {
    VertexSet::from_vertices(n, vislab_core::vertex_set::parse_id_list(text)?)
}
