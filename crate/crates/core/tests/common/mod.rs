//! Brute-force oracles used by the integration tests. Nothing here calls the
//! library's visibility predicates or structural routines.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use vislab_core::{Graph, InvariantKind};

pub const INF: usize = usize::MAX;

pub fn distances(g: &Graph, src: usize) -> Vec<usize> {
    let mut d = vec![INF; g.n()];
    d[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if d[w] == INF {
                d[w] = d[u] + 1;
                queue.push_back(w);
            }
        }
    }
    d
}

pub fn all_distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| distances(g, v)).collect()
}

/// Walks the geodesic DAG from `a` towards `b`, never stepping on a member
/// of `x` other than `b`.
pub fn visible(d: &[Vec<usize>], g: &Graph, x: &[bool], a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    if d[a][b] == INF {
        return false;
    }
    let mut stack = vec![a];
    let mut seen = vec![false; g.n()];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if d[a][w] != d[a][u].saturating_add(1) || d[a][w].saturating_add(d[w][b]) != d[a][b] {
                continue;
            }
            if w == b {
                return true;
            }
            if !x[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

pub fn valid(d: &[Vec<usize>], g: &Graph, members: &[usize], kind: InvariantKind) -> bool {
    let n = g.n();
    let mut x = vec![false; n];
    for &v in members {
        x[v] = true;
    }
    match kind {
        InvariantKind::Mv => members
            .iter()
            .all(|&a| members.iter().all(|&b| visible(d, g, &x, a, b))),
        InvariantKind::Tmv => (0..n).all(|a| (0..n).all(|b| visible(d, g, &x, a, b))),
        InvariantKind::Gp => members.iter().all(|&u| {
            members.iter().all(|&v| {
                u == v
                    || d[u][v] == INF
                    || members
                        .iter()
                        .all(|&w| w == u || w == v || d[u][w].saturating_add(d[w][v]) != d[u][v])
            })
        }),
    }
}

pub fn members_of(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Valid flags for every subset mask of `V(g)` (`g.n() <= 16`).
pub fn valid_table(g: &Graph, kind: InvariantKind) -> Vec<bool> {
    let n = g.n();
    let d = all_distances(g);
    (0..1u64 << n)
        .map(|m| valid(&d, g, &members_of(m, n), kind))
        .collect()
}

/// Maximal means no strict superset is valid.
pub fn maximal_in_table(table: &[bool], mask: u64, n: usize) -> bool {
    let full = (1u64 << n) - 1;
    table[mask as usize] && (0..=full).all(|s| s == mask || s & mask != mask || !table[s as usize])
}

/// Brute-force lower and max values from a validity table.
pub fn lower_and_max(table: &[bool], n: usize) -> (usize, usize) {
    let mut lower = usize::MAX;
    let mut max = 0;
    for m in 0..table.len() as u64 {
        if !table[m as usize] {
            continue;
        }
        let size = m.count_ones() as usize;
        max = max.max(size);
        let extendable = (0..n).any(|v| m >> v & 1 == 0 && table[(m | 1 << v) as usize]);
        if !extendable {
            lower = lower.min(size);
        }
    }
    (lower, max)
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || distances(g, 0).iter().all(|&x| x != INF)
}

pub fn has_bridge(g: &Graph) -> bool {
    g.edges()
        .iter()
        .any(|(u, v)| !is_connected(&g.without_edge(u, v)))
}

/// `v` is the center of a convex `P_3` iff two non-adjacent neighbors have
/// interval `{u, v, w}`.
pub fn convex_p3_centers(g: &Graph) -> BTreeSet<usize> {
    let d = all_distances(g);
    let n = g.n();
    let mut out = BTreeSet::new();
    for v in 0..n {
        let nb = g.neighbors(v);
        'pairs: for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let interval = (0..n)
                    .filter(|&z| d[u][z].saturating_add(d[z][w]) == d[u][w])
                    .count();
                if interval == 3 {
                    out.insert(v);
                    break 'pairs;
                }
            }
        }
    }
    out
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn simplicial_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| is_clique(g, g.neighbors(v))).count()
}

/// Smallest maximal clique by subset enumeration (`n <= 20`).
pub fn min_maximal_clique(g: &Graph) -> usize {
    let n = g.n();
    let mut best = usize::MAX;
    for m in 1..1u64 << n {
        let vs = members_of(m, n);
        if vs.len() >= best || !is_clique(g, &vs) {
            continue;
        }
        let extendable = (0..n).any(|v| m >> v & 1 == 0 && vs.iter().all(|&u| g.has_edge(u, v)));
        if !extendable {
            best = vs.len();
        }
    }
    best
}

/// `i(G)` by subset enumeration.
pub fn independent_domination(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n;
    for m in 0..1u64 << n {
        let vs = members_of(m, n);
        if vs.len() >= best {
            continue;
        }
        let independent = vs.iter().all(|&a| vs.iter().all(|&b| !g.has_edge(a, b)));
        let dominating =
            (0..n).all(|v| m >> v & 1 == 1 || g.neighbors(v).iter().any(|&u| m >> u & 1 == 1));
        if independent && dominating {
            best = vs.len();
        }
    }
    best
}

fn edge_bits(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn graph_of_bits(n: usize, bits: u32) -> Graph {
    let pairs = edge_bits(n);
    Graph::from_edges(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e),
    )
    .unwrap()
}

fn canonical(n: usize, bits: u32) -> u32 {
    let pairs = edge_bits(n);
    let mut table = vec![0usize; n * n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        table[u * n + v] = i;
        table[v * n + u] = i;
    }
    let index = |u: usize, v: usize| table[u * n + v];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u32::MAX;
    loop {
        let mut relabeled = 0u32;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                relabeled |= 1 << index(perm[u], perm[v]);
            }
        }
        best = best.min(relabeled);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every graph on `n` vertices up to isomorphism, grown one vertex at a time.
fn all_graphs_up_to_iso(n: usize) -> Vec<u32> {
    let mut level: BTreeSet<u32> = BTreeSet::from([0]);
    for k in 2..=n {
        let prev_pairs = edge_bits(k - 1);
        let pairs = edge_bits(k);
        let mut next = BTreeSet::new();
        for &bits in &level {
            for attach in 0u32..1 << (k - 1) {
                let mut new_bits = 0u32;
                for (i, &(u, v)) in prev_pairs.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        new_bits |= 1 << pairs.iter().position(|&p| p == (u, v)).unwrap();
                    }
                }
                for u in 0..k - 1 {
                    if attach >> u & 1 == 1 {
                        new_bits |= 1 << pairs.iter().position(|&p| p == (u, k - 1)).unwrap();
                    }
                }
                next.insert(canonical(k, new_bits));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// All connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(
            all_graphs_up_to_iso(n)
                .into_iter()
                .map(|b| graph_of_bits(n, b))
                .filter(is_connected),
        );
    }
    out
}
