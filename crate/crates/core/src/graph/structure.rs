use super::{EdgeList, Graph};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Result of one low-link DFS pass over the whole graph.
struct LowLink {
    bridges: Vec<(usize, usize)>,
    components: Vec<VertexSet>,
    cut_vertices: VertexSet,
}

fn low_link(g: &Graph) -> LowLink {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut clock = 0;
    let mut bridges = Vec::new();
    let mut components = Vec::new();
    let mut cut = VertexSet::new(n);
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        if g.degree(root) == 0 {
            components.push(VertexSet::from_vertices(n, [root]).expect("root in range"));
            continue;
        }
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push((v, w));
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] > disc[parent] {
                    bridges.push((parent.min(v), parent.max(v)));
                }
                if low[v] >= disc[parent] {
                    if parent != root {
                        cut.insert(parent);
                    }
                    let mut comp = VertexSet::new(n);
                    while let Some((a, b)) = edge_stack.pop() {
                        comp.insert(a);
                        comp.insert(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    components.push(comp);
                }
            }
        }
        if root_children > 1 {
            cut.insert(root);
        }
    }
    bridges.sort_unstable();
    components.sort();
    LowLink {
        bridges,
        components,
        cut_vertices: cut,
    }
}

/// Edges lying on no cycle, ascending.
pub fn bridges(g: &Graph) -> EdgeList {
    EdgeList(low_link(g).bridges)
}

/// Vertex sets of the biconnected components (blocks), sorted. Isolated
/// vertices form singleton blocks.
pub fn biconnected_components(g: &Graph) -> Vec<VertexSet> {
    low_link(g).components
}

pub fn cut_vertices(g: &Graph) -> VertexSet {
    low_link(g).cut_vertices
}

fn is_complete_on(g: &Graph, s: &VertexSet) -> bool {
    let members = s.to_vec();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// True iff every block is a complete graph.
pub fn is_block_graph(g: &Graph) -> bool {
    biconnected_components(g)
        .iter()
        .all(|b| is_complete_on(g, b))
}

/// Vertices whose neighborhood induces a complete graph.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    let mut s = VertexSet::new(g.n());
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        let complete = nb
            .iter()
            .enumerate()
            .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if complete {
            s.insert(v);
        }
    }
    s
}

/// Chordality via maximum cardinality search and the parent check on the
/// resulting elimination ordering.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    // position in MCS visit order
    let mut pos = vec![usize::MAX; n];
    let mut visit_order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        visited[v] = true;
        pos[v] = step;
        visit_order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    // Reverse visit order is the elimination ordering. For each v, its
    // earlier-visited neighbors must form a clique; it suffices to check
    // they are adjacent to the latest-visited one among them.
    for &v in &visit_order {
        let earlier: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
            if earlier
                .iter()
                .any(|&w| w != parent && !g.has_edge(w, parent))
            {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinKind {
    /// Non-adjacent, `N(u) = N(v)`.
    Open,
    /// Adjacent, `N[u] = N[v]`.
    Closed,
}

/// All pairs `u < v` with `N(u) \ {v} = N(v) \ {u}`.
pub fn twins(g: &Graph) -> Vec<(usize, usize, TwinKind)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let a = g.neighbors(u).iter().filter(|&&w| w != v);
            let b = g.neighbors(v).iter().filter(|&&w| w != u);
            if a.eq(b) {
                let kind = if g.has_edge(u, v) {
                    TwinKind::Closed
                } else {
                    TwinKind::Open
                };
                out.push((u, v, kind));
            }
        }
    }
    out
}

/// Largest vertex count accepted by [`maximal_cliques`].
pub const MAX_CLIQUE_VERTICES: usize = 64;

/// Every maximal clique, sorted lexicographically.
///
/// Bron-Kerbosch with Tomita pivoting over 64-bit adjacency masks; graphs
/// with more than 64 vertices are refused.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > MAX_CLIQUE_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "maximal clique enumeration supports at most {MAX_CLIQUE_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut out = Vec::new();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    bron_kerbosch(&adj, 0, all, 0, &mut out);
    let mut sets: Vec<VertexSet> = out
        .into_iter()
        .map(|m| VertexSet::from_mask(n, m))
        .collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let px = p | x;
    let pivot = Bits(px)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("non-empty");
    for v in Bits(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}
