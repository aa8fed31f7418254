//! Simple undirected graphs and the primitives every other module builds on.

mod io;
mod metric;
mod product;
mod structure;

pub use io::{export_dot, parse_graph, write_edge_list};
pub use metric::{bfs_distances, DistanceMatrix, UNREACHABLE};
pub use product::cartesian_product;
pub use structure::{
    biconnected_components, bridges, cut_vertices, is_block_graph, is_chordal, maximal_cliques,
    simplicial_vertices, twins, TwinKind,
};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are strictly ascending and symmetric; there are no loops
/// and no parallel edges. Connectivity is not required.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Unordered edges `(u, v)` with `u < v`, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeList(pub Vec<(usize, usize)>);

impl EdgeList {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        let e = if u < v { (u, v) } else { (v, u) };
        self.0.binary_search(&e).is_ok()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ends.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge ({}, {})",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] but silently merges duplicate edges.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> EdgeList {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        EdgeList(out)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// `N(v)` when `closed` is false, `N[v]` otherwise.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = VertexSet::new(self.n());
        for &w in &self.adj[v] {
            s.insert(w);
        }
        if closed {
            s.insert(v);
        }
        Ok(s)
    }

    /// True iff a BFS from vertex 0 reaches every vertex. `K_0` and `K_1`
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        bfs_distances(self, 0)
            .map(|d| d.iter().all(|&x| x != UNREACHABLE))
            .unwrap_or(false)
    }

    /// Graph with the given vertices' incident edges removed (vertex ids kept).
    pub(crate) fn without_vertex_edges(&self, removed: &VertexSet) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, list)| {
                if removed.contains(v) {
                    Vec::new()
                } else {
                    list.iter()
                        .copied()
                        .filter(|&w| !removed.contains(w))
                        .collect()
                }
            })
            .collect();
        Graph { adj }
    }

    /// Copy of the graph with one edge deleted.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let ids: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![UNREACHABLE; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn invariants_hold_after_construction() {
        let g = Graph::from_edges(4, [(2, 0), (0, 1), (3, 1)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.neighbors(1), &[0, 3]);
        assert_eq!(g.edges().0, vec![(0, 1), (0, 2), (1, 3)]);
    }

    #[test]
    fn construction_errors() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn neighborhoods() {
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(star.neighborhood(0, true).unwrap().len(), 5);
        assert!(Graph::empty(1).neighborhood(0, false).unwrap().is_empty());
        assert!(star.neighborhood(5, false).is_err());
        // corner of the 3x3 grid
        let grid = cartesian_product(&path(3), &path(3)).unwrap();
        assert_eq!(grid.neighborhood(0, false).unwrap().to_vec(), vec![1, 3]);
    }

    #[test]
    fn connectivity() {
        assert!(path(5).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(path(5).girth(), None);
    }
}
