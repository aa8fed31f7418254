//! Visibility predicates over a graph with precomputed distances.
//!
//! Everything here works on [`VertexSet`] and arbitrary graph sizes. The
//! solvers use a separate 64-bit kernel for speed; the two are cross-checked
//! in tests.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    /// Mutual-visibility: every two members are X-visible.
    Mv,
    /// Total mutual-visibility: every two vertices of the graph are X-visible.
    Tmv,
    /// General position: no geodesic between two members meets a third.
    Gp,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 3] = [InvariantKind::Mv, InvariantKind::Tmv, InvariantKind::Gp];

    pub fn as_str(self) -> &'static str {
        match self {
            InvariantKind::Mv => "mv",
            InvariantKind::Tmv => "tmv",
            InvariantKind::Gp => "gp",
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InvariantKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mv" => Ok(InvariantKind::Mv),
            "tmv" => Ok(InvariantKind::Tmv),
            "gp" => Ok(InvariantKind::Gp),
            other => Err(Error::InvalidParameter(format!(
                "unknown invariant kind `{other}`"
            ))),
        }
    }
}

/// Outcome of the neighborhood-lemma test at one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborhoodCheck {
    pub vertex: usize,
    /// `N[vertex]` is a maximal mutual-visibility set.
    pub certified: bool,
    /// `deg(vertex) + 1` when certified.
    pub bound: Option<usize>,
}

/// A graph together with its distance matrix.
#[derive(Debug, Clone)]
pub struct VisibilityContext {
    graph: Graph,
    dmat: DistanceMatrix,
}

impl VisibilityContext {
    pub fn new(graph: Graph) -> Self {
        let dmat = DistanceMatrix::new(&graph);
        VisibilityContext { graph, dmat }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dmat
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.dmat.row(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// True iff some shortest `a,b`-path has no internal vertex in `x`.
    ///
    /// Computed literally: delete `x \ {a, b}` and compare the BFS distance
    /// in what remains with `d(a, b)`.
    pub fn is_x_visible(&self, x: &VertexSet, a: usize, b: usize) -> Result<bool> {
        self.graph.check_vertex(a)?;
        self.graph.check_vertex(b)?;
        if a == b || self.graph.has_edge(a, b) {
            return Ok(true);
        }
        let Some(d) = self.dmat.get(a, b) else {
            return Ok(false);
        };
        let mut removed = x.clone();
        removed.remove(a);
        removed.remove(b);
        let h = self.graph.without_vertex_edges(&removed);
        Ok(crate::graph::bfs_distances(&h, a)?[b] == d)
    }

    /// BFS from `src` that may enter blocked vertices but never leaves them
    /// (the source itself is always expanded). The result is the length of a
    /// shortest path whose internal vertices avoid `blocked`.
    fn avoiding_distances(&self, src: usize, blocked: &VertexSet) -> Vec<usize> {
        let n = self.n();
        let mut dist = vec![UNREACHABLE; n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            if v != src && blocked.contains(v) {
                continue;
            }
            for &w in self.graph.neighbors(v) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_valid_set(&self, x: &VertexSet, kind: InvariantKind) -> bool {
        match kind {
            InvariantKind::Mv => x.iter().all(|a| {
                let dist = self.avoiding_distances(a, x);
                x.iter()
                    .filter(|&b| b > a)
                    .all(|b| self.dmat.raw(a, b) != UNREACHABLE && dist[b] == self.dmat.raw(a, b))
            }),
            InvariantKind::Tmv => {
                if x.is_empty() {
                    return true;
                }
                (0..self.n()).all(|a| {
                    let dist = self.avoiding_distances(a, x);
                    (a + 1..self.n()).all(|b| dist[b] == self.dmat.raw(a, b))
                })
            }
            InvariantKind::Gp => {
                let members = x.to_vec();
                members.iter().enumerate().all(|(i, &u)| {
                    members[i + 1..]
                        .iter()
                        .all(|&v| match self.dmat.interval(u, v) {
                            Ok(iv) => iv.intersection(x).len() == 2,
                            Err(_) => false,
                        })
                })
            }
        }
    }

    /// True iff no single vertex can be added to the (valid) set `x`.
    ///
    /// Validity is closed under taking subsets for all three kinds, so
    /// single-vertex extensions decide maximality.
    pub fn is_maximal(&self, x: &VertexSet, kind: InvariantKind) -> Result<bool> {
        if !self.is_valid_set(x, kind) {
            return Err(Error::InvalidSet);
        }
        Ok((0..self.n())
            .filter(|&w| !x.contains(w))
            .all(|w| !self.is_valid_set(&x.with(w), kind)))
    }

    /// Centers of induced paths `u-v-w` with `I(u, w) = {u, v, w}`, i.e. `v`
    /// is the only common neighbor of the non-adjacent pair `u, w`.
    pub fn convex_p3_centers(&self) -> VertexSet {
        let g = &self.graph;
        let mut out = VertexSet::new(self.n());
        for v in 0..self.n() {
            let nb = g.neighbors(v);
            let found = nb.iter().enumerate().any(|(i, &u)| {
                nb[i + 1..]
                    .iter()
                    .any(|&w| !g.has_edge(u, w) && common_neighbor_count(g, u, w) == 1)
            });
            if found {
                out.insert(v);
            }
        }
        out
    }

    /// Vertices `v` for which `{v}` is a total mutual-visibility set.
    pub fn tmv_candidates(&self) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in 0..self.n() {
            let single = VertexSet::from_vertices(self.n(), [v]).expect("in range");
            if self.is_valid_set(&single, InvariantKind::Tmv) {
                out.insert(v);
            }
        }
        out
    }

    /// Neighborhood-lemma test at every vertex: `N[x]` is a maximal
    /// mutual-visibility set iff every two neighbors of `x` are adjacent or
    /// share a common neighbor outside `N[x]`.
    pub fn neighborhood_lemma_scan(&self) -> Result<Vec<NeighborhoodCheck>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let g = &self.graph;
        let mut out = Vec::with_capacity(self.n());
        for x in 0..self.n() {
            let closed = g.neighborhood(x, true)?;
            let nb = g.neighbors(x);
            let certified = nb.iter().enumerate().all(|(i, &u)| {
                nb[i + 1..].iter().all(|&v| {
                    g.has_edge(u, v)
                        || g.neighbors(u)
                            .iter()
                            .any(|&w| !closed.contains(w) && g.has_edge(w, v))
                })
            });
            out.push(NeighborhoodCheck {
                vertex: x,
                certified,
                bound: certified.then(|| g.degree(x) + 1),
            });
        }
        Ok(out)
    }

    /// The line through `x` and `y`: vertices `w` with `d(x,y) = d(x,w) + d(w,y)`
    /// or `d(x,y) = |d(x,w) - d(w,y)|`.
    pub fn line(&self, x: usize, y: usize) -> Result<VertexSet> {
        self.graph.check_vertex(x)?;
        self.graph.check_vertex(y)?;
        if x == y {
            return Err(Error::InvalidParameter(
                "a line needs two distinct vertices".into(),
            ));
        }
        let dxy = self.dmat.get(x, y).ok_or(Error::DisconnectedPair(x, y))?;
        let mut out = VertexSet::new(self.n());
        for w in 0..self.n() {
            if let (Some(a), Some(b)) = (self.dmat.get(x, w), self.dmat.get(w, y)) {
                if a + b == dxy || a.abs_diff(b) == dxy {
                    out.insert(w);
                }
            }
        }
        Ok(out)
    }

    /// Lexicographically first pair whose line is the whole vertex set.
    pub fn has_universal_line(&self) -> Result<Option<(usize, usize)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.n();
        if n < 2 {
            return Err(Error::InvalidParameter(
                "universal lines need at least two vertices".into(),
            ));
        }
        for x in 0..n {
            for y in x + 1..n {
                if self.line(x, y)?.len() == n {
                    return Ok(Some((x, y)));
                }
            }
        }
        Ok(None)
    }
}

fn common_neighbor_count(g: &Graph, u: usize, w: usize) -> usize {
    let (a, b) = (g.neighbors(u), g.neighbors(w));
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
