//! Exact searches for the six invariants and the seeded greedy procedure.
//!
//! All searches run over a 64-bit mask kernel, so graphs are limited to 64
//! vertices; the configurable cap (24 by default) bounds the number of
//! vertices the search actually branches on.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bridges, Graph};
use crate::mask::{bits, MaskKernel, MAX_MASK_VERTICES};
use crate::rng::SplitMix64;
use crate::vertex_set::VertexSet;
use crate::visibility::{InvariantKind, VisibilityContext};

pub const DEFAULT_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Largest valid set.
    Max,
    /// Smallest maximal valid set.
    Lower,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Max => "max",
            Variant::Lower => "lower",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "max" => Ok(Variant::Max),
            "lower" => Ok(Variant::Lower),
            other => Err(Error::InvalidParameter(format!(
                "unknown variant `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of vertices the search may branch on.
    pub cap: usize,
    /// Ignore `cap` (the 64-vertex kernel limit still applies).
    pub force: bool,
    /// Answer lower mutual-visibility with a bridge when one exists.
    pub fast_path: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cap: DEFAULT_CAP,
            force: false,
            fast_path: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOutcome {
    pub kind: InvariantKind,
    pub variant: Variant,
    pub value: usize,
    /// Lexicographically smallest optimum (or the fast-path certificate).
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub fast_path: Option<&'static str>,
}

impl SolverOutcome {
    /// Everything except the wall-clock time.
    pub fn same_result(&self, other: &SolverOutcome) -> bool {
        self.kind == other.kind
            && self.variant == other.variant
            && self.value == other.value
            && self.witness == other.witness
            && self.nodes_explored == other.nodes_explored
            && self.fast_path == other.fast_path
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyProfile {
    pub kind: InvariantKind,
    pub runs: usize,
    pub seed: u64,
    pub min_size: usize,
    pub max_size: usize,
    /// Witness of the first seed reaching `min_size`.
    pub best_min_witness: VertexSet,
}

/// Kernel plus the vertices a search may use, in ascending order.
struct Search<'a> {
    ctx: &'a VisibilityContext,
    kernel: MaskKernel,
    kind: InvariantKind,
    pool: u64,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn prepare(
        ctx: &'a VisibilityContext,
        kind: InvariantKind,
        cfg: &SolverConfig,
    ) -> Result<Self> {
        if !ctx.is_connected() {
            return Err(Error::Disconnected);
        }
        if ctx.n() > MAX_MASK_VERTICES {
            return Err(Error::InstanceTooLarge(format!(
                "exact search supports at most {MAX_MASK_VERTICES} vertices, got {}",
                ctx.n()
            )));
        }
        let kernel = MaskKernel::new(ctx)?;
        // Subsets of valid sets are valid, so a vertex that is not a valid
        // singleton never appears in a total mutual-visibility set.
        let pool = match kind {
            InvariantKind::Tmv => kernel.tmv_candidates(),
            _ => kernel.all(),
        };
        let size = pool.count_ones() as usize;
        if size > cfg.cap && !cfg.force {
            return Err(Error::CapExceeded { size, cap: cfg.cap });
        }
        Ok(Search {
            ctx,
            kernel,
            kind,
            pool,
            order: bits(pool).collect(),
        })
    }

    fn valid(&self, x: u64) -> bool {
        self.kernel.valid(self.kind, x)
    }

    fn maximal(&self, x: u64) -> bool {
        self.kernel.maximal_within(self.kind, x, self.pool)
    }

    fn extend(&self, cur: u64, from: &[usize]) -> Vec<usize> {
        from.iter()
            .copied()
            .filter(|&v| self.valid(cur | 1 << v))
            .collect()
    }

    /// Include-first DFS: sets are visited in lexicographic order, so the
    /// first set reaching the final best size is the canonical optimum.
    fn max_dfs(
        &self,
        cur: u64,
        size: usize,
        compat: &[usize],
        best: &mut (usize, u64),
        nodes: &mut u64,
    ) {
        *nodes += 1;
        if size > best.0 {
            *best = (size, cur);
        }
        for (p, &v) in compat.iter().enumerate() {
            if size + (compat.len() - p) <= best.0 {
                return;
            }
            let next = cur | 1 << v;
            let rest = self.extend(next, &compat[p + 1..]);
            self.max_dfs(next, size + 1, &rest, best, nodes);
        }
    }

    /// Lexicographically first `remaining`-element extension of `cur` drawn
    /// from `compat` that is valid and maximal.
    fn lower_dfs(
        &self,
        cur: u64,
        compat: &[usize],
        remaining: usize,
        nodes: &mut u64,
    ) -> Option<u64> {
        *nodes += 1;
        if remaining == 0 {
            return self.maximal(cur).then_some(cur);
        }
        for (p, &v) in compat.iter().enumerate() {
            if compat.len() - p < remaining {
                break;
            }
            let next = cur | 1 << v;
            let found = if remaining == 1 {
                *nodes += 1;
                self.maximal(next).then_some(next)
            } else {
                let rest = self.extend(next, &compat[p + 1..]);
                self.lower_dfs(next, &rest, remaining - 1, nodes)
            };
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Canonical valid maximal set of exactly `size` vertices, if any.
    /// Branches on the smallest member run in parallel; every branch is
    /// explored to its own first hit so node counts do not depend on the
    /// schedule.
    fn first_maximal_of_size(&self, size: usize, nodes: &mut u64) -> Option<u64> {
        if size == 0 {
            *nodes += 1;
            return self.maximal(0).then_some(0);
        }
        let len = self.order.len();
        if size > len {
            return None;
        }
        let results: Vec<(Option<u64>, u64)> = (0..=len - size)
            .into_par_iter()
            .map(|i| {
                let mut local = 0u64;
                let first = 1u64 << self.order[i];
                local += 1;
                if !self.valid(first) {
                    return (None, local);
                }
                let rest = self.extend(first, &self.order[i + 1..]);
                (self.lower_dfs(first, &rest, size - 1, &mut local), local)
            })
            .collect();
        *nodes += results.iter().map(|r| r.1).sum::<u64>();
        results.into_iter().find_map(|r| r.0)
    }

    fn outcome(
        &self,
        variant: Variant,
        mask: u64,
        nodes: u64,
        start: Instant,
        fast: Option<&'static str>,
    ) -> SolverOutcome {
        let witness = VertexSet::from_mask(self.ctx.n(), mask);
        assert!(
            self.ctx.is_valid_set(&witness, self.kind),
            "solver produced an invalid witness {witness}"
        );
        if variant == Variant::Lower {
            assert!(
                self.ctx.is_maximal(&witness, self.kind).unwrap_or(false),
                "solver produced a non-maximal witness {witness}"
            );
        }
        SolverOutcome {
            kind: self.kind,
            variant,
            value: witness.len(),
            witness,
            nodes_explored: nodes,
            elapsed: start.elapsed(),
            fast_path: fast,
        }
    }
}

/// `μ`, `μ_t` or `gp`: the largest valid set, by branch and bound.
pub fn solve_max(
    ctx: &VisibilityContext,
    kind: InvariantKind,
    cfg: &SolverConfig,
) -> Result<SolverOutcome> {
    let start = Instant::now();
    let search = Search::prepare(ctx, kind, cfg)?;
    let mut best = (0usize, 0u64);
    let mut nodes = 0;
    let roots = search.extend(0, &search.order);
    search.max_dfs(0, 0, &roots, &mut best, &mut nodes);
    Ok(search.outcome(Variant::Max, best.1, nodes, start, None))
}

/// `μ⁻`, `μ⁻_t` or `gp⁻`: the smallest maximal valid set.
///
/// Cardinalities are tried in increasing order; the first cardinality with
/// a valid maximal set is optimal.
pub fn solve_lower(
    ctx: &VisibilityContext,
    kind: InvariantKind,
    cfg: &SolverConfig,
) -> Result<SolverOutcome> {
    solve_lower_bounded(ctx, kind, usize::MAX, cfg)?
        .ok_or_else(|| unreachable_err("every graph has a maximal set"))
}

fn unreachable_err(what: &str) -> Error {
    Error::InvalidParameter(format!("search exhausted unexpectedly: {what}"))
}

/// Like [`solve_lower`] but only tries cardinalities up to `max_size`;
/// `Ok(None)` certifies that no valid maximal set of at most `max_size`
/// vertices exists.
pub fn solve_lower_bounded(
    ctx: &VisibilityContext,
    kind: InvariantKind,
    max_size: usize,
    cfg: &SolverConfig,
) -> Result<Option<SolverOutcome>> {
    let start = Instant::now();
    let g = ctx.graph();
    if cfg.fast_path
        && kind == InvariantKind::Mv
        && g.n() >= 2
        && max_size >= 2
        && ctx.is_connected()
    {
        if let Some((u, v)) = bridges(g).iter().next() {
            let witness = VertexSet::from_vertices(g.n(), [u, v])?;
            debug_assert!(ctx.is_maximal(&witness, kind).unwrap_or(false));
            return Ok(Some(SolverOutcome {
                kind,
                variant: Variant::Lower,
                value: 2,
                witness,
                nodes_explored: 0,
                elapsed: start.elapsed(),
                fast_path: Some("cut-edge shortcut"),
            }));
        }
    }
    let search = Search::prepare(ctx, kind, cfg)?;
    let mut nodes = 0;
    let top = search.order.len().min(max_size);
    for size in 0..=top {
        if let Some(mask) = search.first_maximal_of_size(size, &mut nodes) {
            return Ok(Some(search.outcome(
                Variant::Lower,
                mask,
                nodes,
                start,
                None,
            )));
        }
    }
    Ok(None)
}

/// Scans a seed-derived permutation once, keeping each vertex whose
/// addition leaves the set valid. Because validity is closed under subsets,
/// a single pass yields a maximal set.
pub fn greedy_maximal(
    ctx: &VisibilityContext,
    kind: InvariantKind,
    seed: u64,
) -> Result<VertexSet> {
    if !ctx.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut set = VertexSet::new(ctx.n());
    for v in SplitMix64::new(seed).permutation(ctx.n()) {
        // The whole predicate is re-checked: adding a vertex can block
        // geodesics between vertices that were already visible.
        let candidate = set.with(v);
        if ctx.is_valid_set(&candidate, kind) {
            set = candidate;
        }
    }
    debug_assert!(ctx.is_maximal(&set, kind).unwrap_or(false));
    Ok(set)
}

/// Greedy outcomes over seeds `seed, seed + 1, ..., seed + runs - 1`.
pub fn greedy_profile(
    ctx: &VisibilityContext,
    kind: InvariantKind,
    runs: usize,
    seed: u64,
) -> Result<GreedyProfile> {
    if runs == 0 {
        return Err(Error::InvalidParameter("runs must be at least 1".into()));
    }
    let sets: Vec<VertexSet> = (0..runs as u64)
        .into_par_iter()
        .map(|i| greedy_maximal(ctx, kind, seed.wrapping_add(i)))
        .collect::<Result<_>>()?;
    let min_size = sets.iter().map(VertexSet::len).min().expect("runs >= 1");
    let max_size = sets.iter().map(VertexSet::len).max().expect("runs >= 1");
    let best_min_witness = sets
        .into_iter()
        .find(|s| s.len() == min_size)
        .expect("min attained");
    Ok(GreedyProfile {
        kind,
        runs,
        seed,
        min_size,
        max_size,
        best_min_witness,
    })
}

/// Result of [`independent_domination`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationOutcome {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

/// `i(G)`: the smallest independent dominating set, lexicographically first
/// among optima.
pub fn independent_domination(g: &Graph, cfg: &SolverConfig) -> Result<DominationOutcome> {
    let n = g.n();
    if n > MAX_MASK_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "independent domination supports at most 64 vertices, got {n}"
        )));
    }
    if n > cfg.cap && !cfg.force {
        return Err(Error::CapExceeded {
            size: n,
            cap: cfg.cap,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    fn dfs(
        adj: &[u64],
        all: u64,
        cur: u64,
        covered: u64,
        from: usize,
        left: usize,
        nodes: &mut u64,
    ) -> Option<u64> {
        *nodes += 1;
        if left == 0 {
            return (covered == all).then_some(cur);
        }
        for v in from..adj.len() {
            if adj.len() - v < left {
                break;
            }
            if cur & adj[v] != 0 {
                continue;
            }
            let found = dfs(
                adj,
                all,
                cur | 1 << v,
                covered | adj[v] | 1 << v,
                v + 1,
                left - 1,
                nodes,
            );
            if found.is_some() {
                return found;
            }
        }
        None
    }

    let mut nodes = 0;
    for size in 0..=n {
        if let Some(mask) = dfs(&adj, all, 0, 0, 0, size, &mut nodes) {
            return Ok(DominationOutcome {
                value: size,
                witness: VertexSet::from_mask(n, mask),
                nodes_explored: nodes,
            });
        }
    }
    Err(unreachable_err(
        "a maximal independent set always dominates",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        gen_gadget, gen_gstar, gen_subdivided_complete, generate, FamilySpec, Role,
    };
    use crate::graph::simplicial_vertices;

    fn ctx(spec: FamilySpec) -> VisibilityContext {
        VisibilityContext::new(generate(&spec).unwrap())
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn max_examples() {
        let grid = ctx(FamilySpec::Grid(vec![4, 5]));
        assert_eq!(
            solve_max(&grid, InvariantKind::Mv, &cfg()).unwrap().value,
            8
        );
        let rook = ctx(FamilySpec::CliqueProduct(3, 4));
        assert_eq!(
            solve_max(&rook, InvariantKind::Tmv, &cfg()).unwrap().value,
            4
        );
        let k5 = ctx(FamilySpec::Complete(5));
        let out = solve_max(&k5, InvariantKind::Mv, &cfg()).unwrap();
        assert_eq!((out.value, out.witness.len()), (5, 5));
    }

    #[test]
    fn lower_examples() {
        let mv = InvariantKind::Mv;
        assert_eq!(
            solve_lower(&ctx(FamilySpec::Grid(vec![3, 4])), mv, &cfg())
                .unwrap()
                .value,
            3
        );
        let rook = ctx(FamilySpec::CliqueProduct(3, 4));
        assert_eq!(solve_lower(&rook, mv, &cfg()).unwrap().value, 6);
        assert_eq!(
            solve_lower(&rook, InvariantKind::Tmv, &cfg())
                .unwrap()
                .value,
            3
        );
        let k32 = ctx(FamilySpec::CompleteBipartite(3, 2));
        assert_eq!(solve_lower(&k32, mv, &cfg()).unwrap().value, 3);
        assert_eq!(
            solve_lower(&k32, InvariantKind::Gp, &cfg()).unwrap().value,
            2
        );
        let skn = VisibilityContext::new(gen_subdivided_complete(4).unwrap().0);
        assert_eq!(solve_lower(&skn, mv, &cfg()).unwrap().value, 4);
        let tmv = solve_lower(&skn, InvariantKind::Tmv, &cfg()).unwrap();
        assert_eq!(tmv.value, 0);
        assert!(tmv.witness.is_empty());
    }

    #[test]
    fn canonical_witness_is_lexicographically_first() {
        // Lex-first maximal 3-set of the 3x4 grid is the corner closed
        // neighborhood {0, 1, 4}.
        let grid = ctx(FamilySpec::Grid(vec![3, 4]));
        let out = solve_lower(&grid, InvariantKind::Mv, &cfg()).unwrap();
        assert_eq!(out.witness.to_vec(), vec![0, 1, 4]);
        let (g, roles) = gen_gstar(3, 3, 3, 3).unwrap();
        let out = solve_lower(&VisibilityContext::new(g), InvariantKind::Mv, &cfg()).unwrap();
        let expected: Vec<usize> = [Role::A, Role::APrime, Role::BHub]
            .iter()
            .map(|&r| roles.find(r).unwrap())
            .collect();
        assert_eq!(out.witness.to_vec(), expected);
    }

    #[test]
    fn gstar_general_position_bound() {
        let (g, _) = gen_gstar(3, 3, 3, 3).unwrap();
        let out = solve_lower(&VisibilityContext::new(g), InvariantKind::Gp, &cfg()).unwrap();
        assert!(out.value >= 3);
    }

    #[test]
    fn fast_path_matches_full_search() {
        let p5 = ctx(FamilySpec::Path(5));
        let fast = solve_lower(&p5, InvariantKind::Mv, &cfg()).unwrap();
        assert_eq!(fast.fast_path, Some("cut-edge shortcut"));
        assert_eq!(fast.witness.to_vec(), vec![0, 1]);
        let slow = solve_lower(
            &p5,
            InvariantKind::Mv,
            &SolverConfig {
                fast_path: false,
                ..cfg()
            },
        )
        .unwrap();
        assert_eq!((slow.value, slow.fast_path), (2, None));
    }

    #[test]
    fn errors() {
        let two = VisibilityContext::new(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(
            solve_max(&two, InvariantKind::Mv, &cfg()).unwrap_err(),
            Error::Disconnected
        );
        assert_eq!(
            greedy_maximal(&two, InvariantKind::Mv, 0).unwrap_err(),
            Error::Disconnected
        );
        let big = ctx(FamilySpec::Grid(vec![5, 5]));
        assert!(matches!(
            solve_lower(&big, InvariantKind::Gp, &cfg()),
            Err(Error::CapExceeded { size: 25, cap: 24 })
        ));
        // The total variant only branches on the 4 corner candidates.
        assert_eq!(
            solve_lower(&big, InvariantKind::Tmv, &cfg()).unwrap().value,
            4
        );
        let forced = SolverConfig {
            force: true,
            ..cfg()
        };
        assert!(solve_lower(
            &ctx(FamilySpec::Grid(vec![3, 3])),
            InvariantKind::Gp,
            &forced
        )
        .is_ok());
        let huge = ctx(FamilySpec::Grid(vec![9, 9]));
        assert!(matches!(
            solve_max(&huge, InvariantKind::Tmv, &forced),
            Err(Error::InstanceTooLarge(_))
        ));
        let k25 = generate(&FamilySpec::Complete(25)).unwrap();
        assert!(independent_domination(&k25, &cfg()).is_err());
        assert!(matches!(
            greedy_profile(&ctx(FamilySpec::Path(3)), InvariantKind::Mv, 0, 1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn trivial_graphs() {
        let k1 = ctx(FamilySpec::Complete(1));
        for kind in InvariantKind::ALL {
            assert_eq!(solve_lower(&k1, kind, &cfg()).unwrap().value, 1);
            assert_eq!(solve_max(&k1, kind, &cfg()).unwrap().value, 1);
        }
    }

    #[test]
    fn greedy_examples() {
        let k6 = ctx(FamilySpec::Complete(6));
        for seed in 0..5 {
            assert_eq!(
                greedy_maximal(&k6, InvariantKind::Mv, seed).unwrap().len(),
                6
            );
        }
        let tree_graph = generate(&FamilySpec::RandomTree { n: 10, seed: 3 }).unwrap();
        let leaves = simplicial_vertices(&tree_graph);
        let tree = VisibilityContext::new(tree_graph);
        for seed in 0..5 {
            assert_eq!(
                greedy_maximal(&tree, InvariantKind::Tmv, seed).unwrap(),
                leaves
            );
        }
    }

    #[test]
    fn greedy_on_path_with_prefix_one_two() {
        // Find a seed whose permutation of 0..5 starts 1, 2, then replay the
        // scan by hand: {1,2} is valid, and any third vertex of P_5 would be
        // hidden behind 1 or 2.
        let seed = (0u64..)
            .find(|&s| SplitMix64::new(s).permutation(5)[..2] == [1, 2])
            .unwrap();
        let p5 = ctx(FamilySpec::Path(5));
        assert_eq!(
            greedy_maximal(&p5, InvariantKind::Mv, seed)
                .unwrap()
                .to_vec(),
            vec![1, 2]
        );
    }

    #[test]
    fn greedy_profile_examples() {
        let p3 = ctx(FamilySpec::Path(3));
        let prof = greedy_profile(&p3, InvariantKind::Tmv, 20, 0).unwrap();
        assert_eq!((prof.min_size, prof.max_size), (2, 2));
        let c4 = ctx(FamilySpec::Cycle(4));
        let prof = greedy_profile(&c4, InvariantKind::Mv, 50, 0).unwrap();
        assert_eq!(
            prof.min_size,
            solve_lower(&c4, InvariantKind::Mv, &cfg()).unwrap().value
        );
        assert_eq!(prof.min_size, 3);
        let rook = ctx(FamilySpec::CliqueProduct(4, 4));
        let prof = greedy_profile(&rook, InvariantKind::Mv, 200, 1).unwrap();
        assert!(prof.min_size >= 7);
    }

    #[test]
    fn independent_domination_examples() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let out = independent_domination(&p3, &cfg()).unwrap();
        assert_eq!((out.value, out.witness.to_vec()), (1, vec![1]));
        assert_eq!(
            independent_domination(&generate(&FamilySpec::Complete(6)).unwrap(), &cfg())
                .unwrap()
                .value,
            1
        );
        assert_eq!(
            independent_domination(&generate(&FamilySpec::Cycle(5)).unwrap(), &cfg())
                .unwrap()
                .value,
            2
        );
    }

    #[test]
    fn independent_domination_matches_subset_oracle() {
        for seed in 0..15 {
            let g = generate(&FamilySpec::RandomConnected {
                n: 8,
                edge_permille: 300,
                seed,
            })
            .unwrap();
            let n = g.n();
            let oracle = (0u32..1 << n)
                .filter(|&m| {
                    let independent = g
                        .edges()
                        .iter()
                        .all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0);
                    let dominating = (0..n).all(|v| {
                        m >> v & 1 == 1 || g.neighbors(v).iter().any(|&w| m >> w & 1 == 1)
                    });
                    independent && dominating
                })
                .map(u32::count_ones)
                .min()
                .unwrap() as usize;
            assert_eq!(independent_domination(&g, &cfg()).unwrap().value, oracle);
        }
    }

    #[test]
    fn gadget_formula_on_path() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let (g, _) = gen_gadget(&p3, 3).unwrap();
        let out = solve_lower(&VisibilityContext::new(g), InvariantKind::Tmv, &cfg()).unwrap();
        assert_eq!(out.value, 3 * (2 + 1) + 1);
    }
}
