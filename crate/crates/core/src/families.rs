//! Deterministic generators for the graph families used throughout the
//! verification harness.
//!
//! Random families take an explicit seed and draw from
//! [`SplitMix64`](crate::rng::SplitMix64):
//!
//! * `RandomTree` decodes a Prüfer sequence of `n - 2` draws `below(n)`,
//!   repeatedly joining the smallest current leaf to the next entry.
//! * `RandomBlockGraph` starts from a clique on `s = range(2..=b)` vertices
//!   (capped at `n`) and, while fewer than `n` vertices exist, picks an
//!   existing vertex `c = below(count)` and a size `s = range(2..=b)` capped
//!   so the total does not exceed `n`, then adds `s - 1` new vertices forming
//!   a clique with `c`.
//! * `RandomConnected` samples `G(n, p)` (pairs in lexicographic order, one
//!   `chance(p)` each) and redraws from the same stream until connected.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, Graph};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{r,s}`: vertices `0..r` on one side, `r..r+s` on the other.
    CompleteBipartite(usize, usize),
    /// `K_{1,k}` with center 0.
    Star(usize),
    /// `P_{d1} □ P_{d2} □ ...`, row-major.
    Grid(Vec<usize>),
    Hypercube(usize),
    /// `K_m □ K_n`, vertex `(i, j)` at `i * n + j`.
    CliqueProduct(usize, usize),
    RandomTree {
        n: usize,
        seed: u64,
    },
    RandomBlockGraph {
        n: usize,
        max_block: usize,
        seed: u64,
    },
    /// `G(n, p)` conditioned on connectivity, `p = edge_permille / 1000`.
    RandomConnected {
        n: usize,
        edge_permille: u32,
        seed: u64,
    },
    SubdividedComplete(usize),
}

impl FamilySpec {
    /// Factor sizes when the family is a Cartesian product of named factors.
    pub fn product_dims(&self) -> Option<Vec<usize>> {
        match self {
            FamilySpec::Grid(dims) if dims.len() > 1 => Some(dims.clone()),
            FamilySpec::Hypercube(k) if *k > 1 => Some(vec![2; *k]),
            FamilySpec::CliqueProduct(m, n) => Some(vec![*m, *n]),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Complete(n) => write!(f, "K_{n}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "K_{{{r},{s}}}"),
            FamilySpec::Star(k) => write!(f, "K_{{1,{k}}}"),
            FamilySpec::Grid(dims) => {
                let parts: Vec<String> = dims.iter().map(|d| format!("P_{d}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
            FamilySpec::Hypercube(k) => write!(f, "Q_{k}"),
            FamilySpec::CliqueProduct(m, n) => write!(f, "K_{m} x K_{n}"),
            FamilySpec::RandomTree { n, seed } => write!(f, "random-tree(n={n}, seed={seed})"),
            FamilySpec::RandomBlockGraph { n, max_block, seed } => {
                write!(f, "random-block(n={n}, b={max_block}, seed={seed})")
            }
            FamilySpec::RandomConnected {
                n,
                edge_permille,
                seed,
            } => {
                write!(
                    f,
                    "gnp(n={n}, p={}.{:03}, seed={seed})",
                    edge_permille / 1000,
                    edge_permille % 1000
                )
            }
            FamilySpec::SubdividedComplete(n) => write!(f, "S(K_{n})"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn clique_edges(vertices: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    vertices
        .iter()
        .enumerate()
        .flat_map(move |(i, &u)| vertices[i + 1..].iter().map(move |&v| (u, v)))
}

fn path(n: usize) -> Graph {
    Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
}

fn complete(n: usize) -> Graph {
    let all: Vec<usize> = (0..n).collect();
    Graph::from_edges_dedup(n, clique_edges(&all))
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => {
            if *n == 0 {
                return Err(invalid("path needs at least one vertex"));
            }
            Ok(path(*n))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(invalid("cycle needs at least three vertices"));
            }
            Ok(Graph::from_edges_dedup(
                *n,
                (0..*n).map(|i| (i, (i + 1) % n)),
            ))
        }
        FamilySpec::Complete(n) => {
            if *n == 0 {
                return Err(invalid("complete graph needs at least one vertex"));
            }
            Ok(complete(*n))
        }
        FamilySpec::CompleteBipartite(r, s) => {
            if *r == 0 || *s == 0 {
                return Err(invalid("both sides of K_{r,s} must be non-empty"));
            }
            let (r, s) = (*r, *s);
            Ok(Graph::from_edges_dedup(
                r + s,
                (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))),
            ))
        }
        FamilySpec::Star(k) => generate(&FamilySpec::CompleteBipartite(1, *k)),
        FamilySpec::Grid(dims) => {
            if dims.is_empty() || dims.contains(&0) {
                return Err(invalid(
                    "grid dimensions must be a non-empty list of positive sizes",
                ));
            }
            dims[1..]
                .iter()
                .try_fold(path(dims[0]), |acc, &d| cartesian_product(&acc, &path(d)))
        }
        FamilySpec::Hypercube(k) => {
            if *k > 20 {
                return Err(invalid("hypercube dimension above 20"));
            }
            (0..*k).try_fold(Graph::empty(1), |acc, _| {
                cartesian_product(&acc, &complete(2))
            })
        }
        FamilySpec::CliqueProduct(m, n) => {
            if *m == 0 || *n == 0 {
                return Err(invalid("clique product factors must be non-empty"));
            }
            cartesian_product(&complete(*m), &complete(*n))
        }
        FamilySpec::RandomTree { n, seed } => random_tree(*n, *seed),
        FamilySpec::RandomBlockGraph { n, max_block, seed } => {
            random_block_graph(*n, *max_block, *seed)
        }
        FamilySpec::RandomConnected {
            n,
            edge_permille,
            seed,
        } => random_connected(*n, *edge_permille, *seed),
        FamilySpec::SubdividedComplete(n) => gen_subdivided_complete(*n).map(|(g, _)| g),
    }
}

fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("tree needs at least one vertex"));
    }
    if n <= 2 {
        return Ok(path(n));
    }
    let mut rng = SplitMix64::new(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Ok(Graph::from_edges_dedup(n, edges))
}

fn random_block_graph(n: usize, max_block: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("block graph needs at least one vertex"));
    }
    if max_block < 2 {
        return Err(invalid("maximum block size must be at least 2"));
    }
    let mut rng = SplitMix64::new(seed);
    let first = rng.range_inclusive(2, max_block).min(n);
    let mut count = first;
    let mut edges: Vec<(usize, usize)> = clique_edges(&(0..first).collect::<Vec<_>>()).collect();
    while count < n {
        let cut = rng.below(count);
        let size = rng.range_inclusive(2, max_block).min(n - count + 1);
        let mut block = vec![cut];
        block.extend(count..count + size - 1);
        edges.extend(clique_edges(&block));
        count += size - 1;
    }
    Ok(Graph::from_edges_dedup(n, edges))
}

fn random_connected(n: usize, edge_permille: u32, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("random graph needs at least one vertex"));
    }
    if edge_permille == 0 && n > 1 {
        return Err(invalid("edge probability 0 never yields a connected graph"));
    }
    let p = f64::from(edge_permille.min(1000)) / 1000.0;
    let mut rng = SplitMix64::new(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.chance(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges_dedup(n, edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// What a generated vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Vertex of the source graph (or of `K_n` in `S(K_n)`).
    Original(usize),
    /// Vertex placed on the edge `{u, v}`.
    Subdivided(usize, usize),
    /// The gadget vertex `x` joined to every original vertex.
    Hub,
    /// `x_j`, the other vertices of the clique containing `x`.
    HubClique(usize),
    /// `j`-th vertex of the pendant clique hanging from the edge vertex `v_e`.
    LeafClique {
        edge: (usize, usize),
        index: usize,
    },
    A,
    APrime,
    BHub,
    BElem(usize),
    CliqueT(usize),
    CliqueT1(usize),
    CliqueT2(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Original(i) => write!(f, "original {i}"),
            Role::Subdivided(u, v) => write!(f, "subdivided {u}-{v}"),
            Role::Hub => write!(f, "hub"),
            Role::HubClique(j) => write!(f, "hub-clique {j}"),
            Role::LeafClique {
                edge: (u, v),
                index,
            } => write!(f, "leaf-clique {u}-{v} {index}"),
            Role::A => write!(f, "a"),
            Role::APrime => write!(f, "a'"),
            Role::BHub => write!(f, "b-hub"),
            Role::BElem(i) => write!(f, "B {i}"),
            Role::CliqueT(i) => write!(f, "K_t {i}"),
            Role::CliqueT1(i) => write!(f, "K_t' {i}"),
            Role::CliqueT2(i) => write!(f, "K_t'' {i}"),
        }
    }
}

/// Role of every vertex of a constructed graph, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    pub roles: Vec<Role>,
}

impl GadgetMap {
    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn vertices_where(&self, pred: impl Fn(&Role) -> bool) -> Vec<usize> {
        (0..self.roles.len())
            .filter(|&v| pred(&self.roles[v]))
            .collect()
    }

    pub fn find(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }
}

/// Sidecar text: one `vertex-id role` line per vertex.
impl fmt::Display for GadgetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, r) in self.roles.iter().enumerate() {
            writeln!(f, "{v} {r}")?;
        }
        Ok(())
    }
}

/// `S(K_n)`: originals `0..n`, then one subdivided vertex per pair `i < j` in
/// lexicographic order.
pub fn gen_subdivided_complete(n: usize) -> Result<(Graph, GadgetMap)> {
    if n < 2 {
        return Err(invalid("S(K_n) needs n >= 2"));
    }
    let mut roles: Vec<Role> = (0..n).map(Role::Original).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let s = roles.len();
            roles.push(Role::Subdivided(i, j));
            edges.push((i, s));
            edges.push((j, s));
        }
    }
    Ok((
        Graph::from_edges_dedup(roles.len(), edges),
        GadgetMap { roles },
    ))
}

/// The separator graph `G*`.
///
/// Vertex order: `a = 0`, `a' = 1`, `b-hub = 2`, then `B`, `K_t`, `K_t'`,
/// `K_t''`. Edges: `a`-hub, `a'`-hub; `a` and `a'` to every vertex of `B`;
/// `K_t` joined to `a` and the hub; `K_t'` joined to the hub; `K_t''` joined
/// to `a'` and the hub.
pub fn gen_gstar(b: usize, t: usize, t1: usize, t2: usize) -> Result<(Graph, GadgetMap)> {
    if b == 0 || t == 0 || t1 == 0 || t2 == 0 {
        return Err(invalid("G* needs b, t, t', t'' >= 1"));
    }
    let (a, ap, hub) = (0, 1, 2);
    let mut roles = vec![Role::A, Role::APrime, Role::BHub];
    let mut edges = vec![(a, hub), (ap, hub)];
    for i in 0..b {
        let v = roles.len();
        roles.push(Role::BElem(i));
        edges.push((a, v));
        edges.push((ap, v));
    }
    let mut add_clique = |size: usize, role: fn(usize) -> Role, joined: &[usize]| {
        let start = roles.len();
        roles.extend((0..size).map(role));
        let members: Vec<usize> = (start..start + size).collect();
        edges.extend(clique_edges(&members));
        for &m in &members {
            for &j in joined {
                edges.push((j, m));
            }
        }
    };
    add_clique(t, Role::CliqueT, &[a, hub]);
    add_clique(t1, Role::CliqueT1, &[hub]);
    add_clique(t2, Role::CliqueT2, &[ap, hub]);
    let n = roles.len();
    Ok((Graph::from_edges_dedup(n, edges), GadgetMap { roles }))
}

/// Reduction gadget `G'` built from a connected graph `g` and `t >= 3`.
///
/// Vertex order: the `n` original vertices (keeping their edges), one vertex
/// `v_e` per edge in ascending edge order (joined to both ends and forming a
/// clique `K_m`), the hub `x` (joined to every original vertex), the hub
/// clique `x_1..x_t` (a `K_{t+1}` with `x`), and finally a pendant `K_t` per
/// edge vertex, each member joined to its `v_e`.
///
/// `|V(G')| = n + m + (t + 1) + t * m`.
pub fn gen_gadget(g: &Graph, t: usize) -> Result<(Graph, GadgetMap)> {
    if t < 3 {
        return Err(invalid("gadget needs t >= 3"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let source_edges = g.edges();
    let m = source_edges.len();
    let mut roles: Vec<Role> = (0..n).map(Role::Original).collect();
    let mut edges: Vec<(usize, usize)> = source_edges.iter().collect();

    let edge_vertices: Vec<usize> = (n..n + m).collect();
    for (ve, (i, j)) in edge_vertices.iter().zip(source_edges.iter()) {
        roles.push(Role::Subdivided(i, j));
        edges.push((i, *ve));
        edges.push((j, *ve));
    }
    edges.extend(clique_edges(&edge_vertices));

    let x = roles.len();
    roles.push(Role::Hub);
    edges.extend((0..n).map(|i| (i, x)));
    let mut hub_clique = vec![x];
    for j in 0..t {
        hub_clique.push(roles.len());
        roles.push(Role::HubClique(j));
    }
    edges.extend(clique_edges(&hub_clique));

    for (ve, e) in edge_vertices.iter().zip(source_edges.iter()) {
        let start = roles.len();
        roles.extend((0..t).map(|index| Role::LeafClique { edge: e, index }));
        let mut block = vec![*ve];
        block.extend(start..start + t);
        edges.extend(clique_edges(&block));
    }
    let total = roles.len();
    debug_assert_eq!(total, n + m + t + 1 + t * m);
    Ok((Graph::from_edges_dedup(total, edges), GadgetMap { roles }))
}
