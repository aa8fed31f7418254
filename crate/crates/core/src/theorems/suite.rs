//! Closed-form cross-checker: replays known values and characterizations
//! against the exact solvers.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::matrix::{
    is_22_saturated, matrix_of_set, min_saturated_ones, mv_matrix_equivalence, set_of_matrix,
    BinaryMatrix,
};
use crate::error::{Error, Result};
use crate::families::{gen_gadget, gen_gstar, gen_subdivided_complete, generate, FamilySpec, Role};
use crate::graph::{bridges, is_chordal, maximal_cliques, simplicial_vertices, twins, Graph};
use crate::solvers::{
    independent_domination, solve_lower, solve_lower_bounded, solve_max, SolverConfig,
};
use crate::vertex_set::VertexSet;
use crate::visibility::{InvariantKind, VisibilityContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Exactly(usize),
    AtLeast(usize),
    AtMost(usize),
}

impl Expected {
    pub fn admits(self, value: usize) -> bool {
        match self {
            Expected::Exactly(e) => value == e,
            Expected::AtLeast(e) => value >= e,
            Expected::AtMost(e) => value <= e,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exactly(e) => write!(f, "{e}"),
            Expected::AtLeast(e) => write!(f, ">= {e}"),
            Expected::AtMost(e) => write!(f, "<= {e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => f.write_str("PASS"),
            CheckStatus::Fail => f.write_str("FAIL"),
            CheckStatus::Skipped(reason) => write!(f, "SKIPPED ({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub instance: String,
    pub expected: Expected,
    /// Where the expected value comes from.
    pub citation: String,
    /// `None` when the check was skipped or errored.
    pub computed: Option<usize>,
    pub status: CheckStatus,
    /// First counterexample or error message, if any.
    pub detail: Option<String>,
    pub runtime: Duration,
}

impl CheckReport {
    pub fn new(
        name: impl Into<String>,
        instance: impl Into<String>,
        expected: Expected,
        citation: impl Into<String>,
        computed: usize,
        runtime: Duration,
    ) -> Self {
        CheckReport {
            name: name.into(),
            instance: instance.into(),
            expected,
            citation: citation.into(),
            computed: Some(computed),
            status: if expected.admits(computed) {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail: None,
            runtime,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }

    pub fn computed_str(&self) -> String {
        self.computed
            .map_or_else(|| "-".to_string(), |c| c.to_string())
    }
}

/// True iff no report failed; skipped reports do not fail a suite.
pub fn suite_passed(reports: &[CheckReport]) -> bool {
    !reports.iter().any(CheckReport::failed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    ClosedForms,
    Matrix,
    Characterizations,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::ClosedForms => "closed-forms",
            Suite::Matrix => "matrix",
            Suite::Characterizations => "characterizations",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed-forms" => Ok(Suite::ClosedForms),
            "matrix" => Ok(Suite::Matrix),
            "characterizations" => Ok(Suite::Characterizations),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidParameter(format!("unknown suite `{other}`"))),
        }
    }
}

/// Caps and corpus parameters for the suites.
///
/// The random corpus is `corpus_size` connected `G(n, p)` graphs: graph `i`
/// has `n = corpus_min_n + i mod (corpus_max_n - corpus_min_n + 1)`, edge
/// probability `0.20 + 0.15 * ((i / 6) mod 5)` and seed `corpus_seed + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub solver: SolverConfig,
    /// Largest `m * n` for exhaustive matrix enumeration.
    pub matrix_cap: usize,
    pub corpus_seed: u64,
    pub corpus_size: usize,
    pub corpus_min_n: usize,
    pub corpus_max_n: usize,
    pub block_graphs: usize,
    pub block_graph_max_n: usize,
    pub trees: usize,
    pub tree_max_n: usize,
    /// Clique size `t` used for the reduction gadgets.
    pub gadget_t: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            solver: SolverConfig::default(),
            matrix_cap: super::matrix::MATRIX_EXHAUSTIVE_CAP,
            corpus_seed: 0x5eed,
            corpus_size: 60,
            corpus_min_n: 4,
            corpus_max_n: 9,
            block_graphs: 20,
            block_graph_max_n: 14,
            trees: 10,
            tree_max_n: 14,
            gadget_t: 3,
        }
    }
}

impl SuiteConfig {
    pub fn corpus(&self) -> Vec<FamilySpec> {
        let span = self.corpus_max_n.saturating_sub(self.corpus_min_n) + 1;
        (0..self.corpus_size)
            .map(|i| FamilySpec::RandomConnected {
                n: self.corpus_min_n + i % span,
                edge_permille: 200 + 150 * ((i / 6) % 5) as u32,
                seed: self.corpus_seed.wrapping_add(i as u64),
            })
            .collect()
    }

    /// Block graphs with `n` cycling through `6..=block_graph_max_n`.
    pub fn block_graph_specs(&self) -> Vec<FamilySpec> {
        let span = self.block_graph_max_n.saturating_sub(6) + 1;
        (0..self.block_graphs)
            .map(|i| FamilySpec::RandomBlockGraph {
                n: (6 + i % span).min(self.block_graph_max_n),
                max_block: 2 + i % 4,
                seed: self.corpus_seed.wrapping_add(1000 + i as u64),
            })
            .collect()
    }

    pub fn tree_specs(&self) -> Vec<FamilySpec> {
        let span = self.tree_max_n.saturating_sub(4) + 1;
        (0..self.trees)
            .map(|i| FamilySpec::RandomTree {
                n: (4 + i % span).min(self.tree_max_n),
                seed: self.corpus_seed.wrapping_add(2000 + i as u64),
            })
            .collect()
    }
}

struct Computed {
    value: usize,
    detail: Option<String>,
}

impl From<usize> for Computed {
    fn from(value: usize) -> Self {
        Computed {
            value,
            detail: None,
        }
    }
}

type Runner = Box<dyn Fn(&SuiteConfig) -> Result<Computed> + Send + Sync>;

struct Check {
    name: &'static str,
    instance: String,
    expected: Expected,
    citation: &'static str,
    run: Runner,
}

impl Check {
    fn new<F, C>(
        name: &'static str,
        instance: impl Into<String>,
        expected: Expected,
        citation: &'static str,
        run: F,
    ) -> Self
    where
        F: Fn(&SuiteConfig) -> Result<C> + Send + Sync + 'static,
        C: Into<Computed>,
    {
        Check {
            name,
            instance: instance.into(),
            expected,
            citation,
            run: Box::new(move |cfg| run(cfg).map(Into::into)),
        }
    }

    fn execute(&self, cfg: &SuiteConfig) -> CheckReport {
        let start = Instant::now();
        let result = (self.run)(cfg);
        let runtime = start.elapsed();
        let mut report = CheckReport {
            name: self.name.to_string(),
            instance: self.instance.clone(),
            expected: self.expected,
            citation: self.citation.to_string(),
            computed: None,
            status: CheckStatus::Fail,
            detail: None,
            runtime,
        };
        match result {
            Ok(c) => {
                report.computed = Some(c.value);
                report.status = if self.expected.admits(c.value) {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                };
                report.detail = c.detail;
            }
            Err(e @ (Error::CapExceeded { .. } | Error::InstanceTooLarge(_))) => {
                report.status = CheckStatus::Skipped(e.to_string());
            }
            Err(e) => report.detail = Some(e.to_string()),
        }
        report
    }
}

/// Runs one suite. Checks run concurrently; reports come back sorted by
/// check name, ties kept in construction order.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::ClosedForms | Suite::All) {
        checks.extend(closed_form_checks(cfg));
    }
    if matches!(suite, Suite::Matrix | Suite::All) {
        checks.extend(matrix_checks());
    }
    if matches!(suite, Suite::Characterizations | Suite::All) {
        checks.extend(characterization_checks(cfg));
    }
    let mut reports: Vec<CheckReport> = checks.par_iter().map(|c| c.execute(cfg)).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

pub fn run_closed_form_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    run_suite(Suite::ClosedForms, cfg)
}

fn lower_of(g: &Graph, kind: InvariantKind, cfg: &SolverConfig) -> Result<usize> {
    Ok(solve_lower(&VisibilityContext::new(g.clone()), kind, cfg)?.value)
}

fn max_of(g: &Graph, kind: InvariantKind, cfg: &SolverConfig) -> Result<usize> {
    Ok(solve_max(&VisibilityContext::new(g.clone()), kind, cfg)?.value)
}

fn family_value(
    spec: FamilySpec,
    kind: InvariantKind,
    lower: bool,
) -> impl Fn(&SuiteConfig) -> Result<usize> {
    move |cfg| {
        let g = generate(&spec)?;
        if lower {
            lower_of(&g, kind, &cfg.solver)
        } else {
            max_of(&g, kind, &cfg.solver)
        }
    }
}

fn closed_form_checks(cfg: &SuiteConfig) -> Vec<Check> {
    use InvariantKind::{Gp, Mv, Tmv};
    let mut out = Vec::new();

    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 5)] {
        let spec = FamilySpec::Grid(vec![m, n]);
        out.push(Check::new(
            "grid-lower-mv",
            spec.to_string(),
            Expected::Exactly(3),
            "grids P_m x P_n: lower mutual-visibility 3 (corner neighborhood)",
            family_value(spec, Mv, true),
        ));
    }
    // P_3 x P_3 is excluded: its value is 5.
    for (m, n) in [(3, 4), (4, 4), (4, 5)] {
        let spec = FamilySpec::Grid(vec![m, n]);
        out.push(Check::new(
            "grid-mv",
            spec.to_string(),
            Expected::Exactly(2 * m.min(n)),
            "Di Stefano: mu(P_m x P_n) = 2 min{m,n} (checked for 3x4 and larger)",
            family_value(spec, Mv, false),
        ));
    }
    for dims in [vec![3, 3], vec![3, 4], vec![3, 3, 3]] {
        let spec = FamilySpec::Grid(dims.clone());
        out.push(Check::new(
            "grid-lower-tmv",
            spec.to_string(),
            Expected::Exactly(1 << dims.len()),
            "grids with all factors >= 3: lower total mutual-visibility 2^k",
            family_value(spec, Tmv, true),
        ));
    }
    for (m, n) in [(2, 3), (3, 3), (3, 4), (4, 4)] {
        let spec = FamilySpec::CliqueProduct(m, n);
        out.push(Check::new(
            "clique-product-lower-mv",
            spec.to_string(),
            Expected::Exactly(m + n - 1),
            "Bollobas-Wessel consequence: lower mutual-visibility of K_m x K_n is m+n-1",
            family_value(spec, Mv, true),
        ));
    }
    for (m, n) in [(3, 3), (3, 4), (4, 4)] {
        let spec = FamilySpec::CliqueProduct(m, n);
        out.push(Check::new(
            "clique-product-lower-tmv",
            spec.to_string(),
            Expected::Exactly(m.min(n)),
            "K_m x K_n with m,n >= 3: lower total mutual-visibility min{m,n}",
            family_value(spec, Tmv, true),
        ));
    }
    for (m, n) in [(3, 3), (3, 4)] {
        let spec = FamilySpec::CliqueProduct(m, n);
        out.push(Check::new(
            "clique-product-tmv",
            spec.to_string(),
            Expected::Exactly(m.max(n)),
            "Tian-Klavzar: mu_t(K_m x K_n) = max{m,n}",
            family_value(spec, Tmv, false),
        ));
    }
    for (r, s) in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 2), (4, 3)] {
        let spec = FamilySpec::CompleteBipartite(r, s);
        out.push(Check::new(
            "complete-bipartite-lower-mv",
            spec.to_string(),
            Expected::Exactly(s + 1),
            "complete bipartite K_{r,s}, r >= s: lower mutual-visibility s+1",
            family_value(spec, Mv, true),
        ));
    }
    for (r, s) in [(2, 1), (2, 2), (3, 2), (3, 3), (4, 2)] {
        let spec = FamilySpec::CompleteBipartite(r, s);
        out.push(Check::new(
            "complete-bipartite-lower-gp",
            spec.to_string(),
            Expected::Exactly(2),
            "complete bipartite K_{r,s}: lower general position 2",
            family_value(spec, Gp, true),
        ));
    }
    for n in [3, 4] {
        let spec = FamilySpec::SubdividedComplete(n);
        out.push(Check::new(
            "subdivided-complete-lower-mv",
            spec.to_string(),
            Expected::Exactly(n),
            "subdivided complete graph S(K_n), n >= 3: lower mutual-visibility n",
            family_value(spec.clone(), Mv, true),
        ));
        out.push(Check::new(
            "subdivided-complete-lower-tmv",
            spec.to_string(),
            Expected::Exactly(0),
            "subdivided complete graph S(K_n), n >= 3: lower total mutual-visibility 0",
            family_value(spec.clone(), Tmv, true),
        ));
        out.push(Check::new(
            "subdivided-complete-tmv",
            spec.to_string(),
            Expected::Exactly(0),
            "Tian-Klavzar: girth >= 5 and minimum degree >= 2 force mu_t = 0",
            move |cfg: &SuiteConfig| {
                let (g, _) = gen_subdivided_complete(n)?;
                if g.min_degree() < 2 || g.girth().is_some_and(|c| c < 5) {
                    return Err(Error::InvalidParameter(
                        "S(K_n) should have girth >= 5 and min degree 2".into(),
                    ));
                }
                max_of(&g, Tmv, &cfg.solver)
            },
        ));
    }

    out.extend(block_check(
        "two triangles sharing a vertex".to_string(),
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
    ));
    out.extend(block_graph_checks(cfg));
    out.extend(tree_checks(cfg));
    out.extend(gadget_checks(cfg));
    out.extend(gstar_checks());
    out
}

fn block_graph_checks(cfg: &SuiteConfig) -> Vec<Check> {
    cfg.block_graph_specs()
        .into_iter()
        .flat_map(|spec| block_check(spec.to_string(), generate(&spec)))
        .collect()
}

/// Two checks per block graph; expected values come from the block structure.
fn block_check(instance: String, g: Result<Graph>) -> Vec<Check> {
    let g = match g {
        Ok(g) => g,
        Err(e) => return vec![construction_failure("block-graph", instance, e)],
    };
    let simplicial = simplicial_vertices(&g).len();
    let min_clique = match maximal_cliques(&g) {
        Ok(cliques) => cliques.iter().map(VertexSet::len).min().unwrap_or(0),
        Err(e) => return vec![construction_failure("block-graph", instance, e)],
    };
    let g2 = g.clone();
    vec![
        Check::new(
            "block-graph-lower-tmv",
            instance.clone(),
            Expected::Exactly(simplicial),
            "block graphs: lower total mutual-visibility equals the number of simplicial vertices",
            move |cfg: &SuiteConfig| lower_of(&g, InvariantKind::Tmv, &cfg.solver),
        ),
        Check::new(
            "block-graph-lower-mv",
            instance,
            Expected::Exactly(min_clique),
            "block graphs: lower mutual-visibility equals the smallest maximal clique",
            move |cfg: &SuiteConfig| {
                let solver = SolverConfig {
                    fast_path: false,
                    ..cfg.solver
                };
                lower_of(&g2, InvariantKind::Mv, &solver)
            },
        ),
    ]
}

fn construction_failure(name: &'static str, instance: String, e: Error) -> Check {
    let msg = e.to_string();
    Check::new(
        name,
        instance,
        Expected::Exactly(0),
        "instance construction",
        move |_: &SuiteConfig| Err::<usize, _>(Error::InvalidParameter(msg.clone())),
    )
}

fn tree_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for spec in cfg.tree_specs() {
        let g = match generate(&spec) {
            Ok(g) => g,
            Err(e) => {
                out.push(construction_failure("tree", spec.to_string(), e));
                continue;
            }
        };
        let leaves = (0..g.n()).filter(|&v| g.degree(v) == 1).count();
        let g2 = g.clone();
        out.push(Check::new(
            "tree-lower-tmv",
            spec.to_string(),
            Expected::Exactly(leaves),
            "trees: lower total mutual-visibility equals the number of leaves",
            move |cfg: &SuiteConfig| lower_of(&g, InvariantKind::Tmv, &cfg.solver),
        ));
        out.push(Check::new(
            "tree-lower-mv",
            spec.to_string(),
            Expected::Exactly(2),
            "trees: lower mutual-visibility 2 (every edge is a cut-edge)",
            move |cfg: &SuiteConfig| {
                let solver = SolverConfig {
                    fast_path: false,
                    ..cfg.solver
                };
                lower_of(&g2, InvariantKind::Mv, &solver)
            },
        ));
    }
    out
}

fn gadget_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let t = cfg.gadget_t;
    let bases = [
        ("P_3", generate(&FamilySpec::Path(3))),
        ("K_3", generate(&FamilySpec::Complete(3))),
        ("star S_4", generate(&FamilySpec::Star(4))),
    ];
    let mut out = Vec::new();
    for (label, base) in bases {
        let instance = format!("gadget({label}, t={t})");
        let check = base
            .and_then(|g| {
                let i = independent_domination(&g, &cfg.solver)?.value;
                let m = g.edge_count();
                Ok((gen_gadget(&g, t)?.0, t * (m + 1) + i))
            })
            .map(|(gadget, expected)| {
                Check::new(
                    "gadget-lower-tmv",
                    instance.clone(),
                    Expected::Exactly(expected),
                    "hardness reduction: mu_t^-(G') = t(m+1) + i(G)",
                    move |cfg: &SuiteConfig| lower_of(&gadget, InvariantKind::Tmv, &cfg.solver),
                )
            });
        out.push(check.unwrap_or_else(|e| construction_failure("gadget-lower-tmv", instance, e)));
    }
    out
}

const GSTAR_SIZES: (usize, usize, usize, usize) = (4, 4, 4, 4);

fn gstar_instance() -> String {
    let (b, t, t1, t2) = GSTAR_SIZES;
    format!("G*(b={b}, t={t}, t'={t1}, t''={t2})")
}

fn gstar_checks() -> Vec<Check> {
    let (b, t, t1, t2) = GSTAR_SIZES;
    let bound = b.min(t).min(t1).min(t2);
    vec![
        Check::new(
            "gstar-lower-mv",
            gstar_instance(),
            Expected::Exactly(3),
            "G* separation: mu^-(G*) <= 3, and no cut-edge forces >= 3",
            move |cfg: &SuiteConfig| {
                lower_of(&gen_gstar(b, t, t1, t2)?.0, InvariantKind::Mv, &cfg.solver)
            },
        ),
        Check::new(
            "gstar-lower-mv-witness",
            format!("{} witness {{a, a', b-hub}}", gstar_instance()),
            Expected::Exactly(0),
            "G* separation: {a, a', b-hub} is a smallest maximal mutual-visibility set",
            move |cfg: &SuiteConfig| {
                let (g, roles) = gen_gstar(b, t, t1, t2)?;
                let want: Vec<usize> = [Role::A, Role::APrime, Role::BHub]
                    .iter()
                    .filter_map(|&r| roles.find(r))
                    .collect();
                let out = solve_lower(&VisibilityContext::new(g), InvariantKind::Mv, &cfg.solver)?;
                let mismatch = out.witness.to_vec() != want;
                Ok(Computed {
                    value: usize::from(mismatch),
                    detail: mismatch.then(|| format!("witness {}", out.witness)),
                })
            },
        ),
        Check::new(
            "gstar-lower-gp",
            gstar_instance(),
            Expected::AtLeast(bound),
            "G* separation: gp^-(G*) >= min{t, t', t'', |B|}",
            move |cfg: &SuiteConfig| {
                lower_of(&gen_gstar(b, t, t1, t2)?.0, InvariantKind::Gp, &cfg.solver)
            },
        ),
        Check::new(
            "gstar-lower-gp-bounded",
            format!("{} no maximal GP set of size < {bound}", gstar_instance()),
            Expected::Exactly(0),
            "G* separation: gp^-(G*) >= min{t, t', t'', |B|}",
            move |cfg: &SuiteConfig| {
                let ctx = VisibilityContext::new(gen_gstar(b, t, t1, t2)?.0);
                let solver = SolverConfig {
                    force: true,
                    ..cfg.solver
                };
                let found = solve_lower_bounded(&ctx, InvariantKind::Gp, bound - 1, &solver)?;
                Ok(Computed {
                    value: usize::from(found.is_some()),
                    detail: found.map(|o| format!("maximal GP set {}", o.witness)),
                })
            },
        ),
    ]
}

fn matrix_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        out.push(Check::new(
            "matrix-mv-equivalence",
            format!("K_{m} x K_{n}"),
            Expected::Exactly(0),
            "MV sets of K_m x K_n are the C4-free matrices; maximal ones are (2,2)-saturated",
            move |cfg: &SuiteConfig| {
                cap_matrix(m, n, cfg)?;
                let report = mv_matrix_equivalence(m, n)?;
                Ok(report.computed.unwrap_or(usize::MAX))
            },
        ));
    }
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        out.push(Check::new(
            "matrix-min-saturated-ones",
            format!("{m}x{n}"),
            Expected::Exactly(m + n - 1),
            "Bollobas-Wessel: a (2,2)-saturated m x n matrix has >= m+n-1 ones, the cross attains it",
            move |cfg: &SuiteConfig| {
                cap_matrix(m, n, cfg)?;
                min_saturated_ones(m, n)
            },
        ));
    }
    for (m, n) in [(2, 2), (3, 4), (4, 5), (5, 5)] {
        out.push(Check::new(
            "matrix-cross-saturated",
            format!("{m}x{n}"),
            Expected::Exactly(m + n - 1),
            "the cross N[(1,1)] is a maximal MV set of K_m x K_n with m+n-1 vertices",
            move |_: &SuiteConfig| {
                let cross = BinaryMatrix::cross(m, n);
                let ctx = VisibilityContext::new(generate(&FamilySpec::CliqueProduct(m, n))?);
                let set = set_of_matrix(&cross);
                let ok = is_22_saturated(&cross)? && ctx.is_maximal(&set, InvariantKind::Mv)?;
                Ok(Computed {
                    value: if ok { cross.ones() } else { 0 },
                    detail: (!ok).then(|| "cross not maximal".into()),
                })
            },
        ));
    }
    out.push(Check::new(
        "matrix-bijection",
        "3x4 (4096 subsets)",
        Expected::Exactly(0),
        "row-major bijection between subsets of K_m x K_n and m x n binary matrices",
        |_: &SuiteConfig| {
            let mut bad = 0;
            for mask in 0u32..1 << 12 {
                let set = VertexSet::from_vertices(12, (0..12).filter(|&v| mask >> v & 1 == 1))?;
                if set_of_matrix(&matrix_of_set(3, 4, &set)?) != set {
                    bad += 1;
                }
            }
            Ok(bad)
        },
    ));
    out
}

fn cap_matrix(m: usize, n: usize, cfg: &SuiteConfig) -> Result<()> {
    if m * n > cfg.matrix_cap {
        return Err(Error::CapExceeded {
            size: m * n,
            cap: cfg.matrix_cap,
        });
    }
    Ok(())
}

/// Named graphs used next to the random corpus.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let specs = [
        FamilySpec::Path(1),
        FamilySpec::Path(2),
        FamilySpec::Path(3),
        FamilySpec::Path(6),
        FamilySpec::Cycle(3),
        FamilySpec::Cycle(4),
        FamilySpec::Cycle(5),
        FamilySpec::Cycle(6),
        FamilySpec::Cycle(7),
        FamilySpec::Complete(4),
        FamilySpec::Complete(5),
        FamilySpec::CompleteBipartite(2, 3),
        FamilySpec::CompleteBipartite(3, 3),
        FamilySpec::Star(4),
        FamilySpec::Grid(vec![2, 3]),
        FamilySpec::Grid(vec![3, 3]),
        FamilySpec::Grid(vec![3, 4]),
        FamilySpec::Hypercube(3),
        FamilySpec::CliqueProduct(2, 3),
        FamilySpec::CliqueProduct(3, 3),
        FamilySpec::SubdividedComplete(3),
        FamilySpec::SubdividedComplete(4),
    ];
    let mut out: Vec<(String, Graph)> = specs
        .iter()
        .filter_map(|s| generate(s).ok().map(|g| (s.to_string(), g)))
        .collect();
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    if let Ok(p) = Graph::from_edges(10, outer.chain(spokes).chain(inner)) {
        out.push(("Petersen".into(), p));
    }
    if let Ok((g, _)) = gen_gstar(2, 2, 2, 2) {
        out.push(("G*(2,2,2,2)".into(), g));
    }
    out
}

fn characterization_graphs(cfg: &SuiteConfig) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for spec in cfg.corpus() {
        out.push((spec.to_string(), generate(&spec)?));
    }
    out.extend(named_graphs());
    Ok(out)
}

/// Counts graphs for which `violates` returns true; the first offender is
/// kept as detail.
fn count_violations<F>(cfg: &SuiteConfig, min_n: usize, violates: F) -> Result<Computed>
where
    F: Fn(&VisibilityContext, &SolverConfig) -> Result<bool> + Sync,
{
    let graphs = characterization_graphs(cfg)?;
    let flags: Vec<bool> = graphs
        .par_iter()
        .filter(|(_, g)| g.n() >= min_n)
        .map(|(_, g)| violates(&VisibilityContext::new(g.clone()), &cfg.solver))
        .collect::<Result<_>>()?;
    let names: Vec<&String> = graphs
        .iter()
        .filter(|(_, g)| g.n() >= min_n)
        .map(|(s, _)| s)
        .collect();
    let first = flags
        .iter()
        .position(|&f| f)
        .map(|i| format!("first counterexample: {}", names[i]));
    Ok(Computed {
        value: flags.iter().filter(|&&f| f).count(),
        detail: first,
    })
}

fn exact_lower_mv(ctx: &VisibilityContext, solver: &SolverConfig) -> Result<usize> {
    let solver = SolverConfig {
        fast_path: false,
        ..*solver
    };
    Ok(solve_lower(ctx, InvariantKind::Mv, &solver)?.value)
}

fn is_p4_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != b && d != a && !g.has_edge(b, d) && !g.has_edge(a, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn characterization_checks(cfg: &SuiteConfig) -> Vec<Check> {
    use InvariantKind::{Gp, Mv, Tmv};
    let instance = format!(
        "{}-graph corpus + {} named",
        cfg.corpus_size,
        named_graphs().len()
    );
    let mut out = Vec::new();
    out.push(Check::new(
        "char-cut-edge-iff-lower-mv-2",
        instance.clone(),
        Expected::Exactly(0),
        "connected G on >= 2 vertices: mu^-(G) = 2 iff G has a cut-edge",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 2, |ctx, s| {
                Ok((exact_lower_mv(ctx, s)? == 2) != !bridges(ctx.graph()).is_empty())
            })
        },
    ));
    out.push(Check::new(
        "char-lower-mv-1-iff-k1",
        instance.clone(),
        Expected::Exactly(0),
        "connected G: mu^-(G) = 1 iff G = K_1",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 1, |ctx, s| {
                Ok((exact_lower_mv(ctx, s)? == 1) != (ctx.n() == 1))
            })
        },
    ));
    out.push(Check::new(
        "char-convex-p3-iff-lower-tmv-0",
        instance.clone(),
        Expected::Exactly(0),
        "mu_t^-(G) = 0 iff every vertex is the center of a convex P_3",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 1, |ctx, s| {
                let all_centers = ctx.convex_p3_centers().len() == ctx.n();
                Ok((solve_lower(ctx, Tmv, s)?.value == 0) != all_centers)
            })
        },
    ));
    out.push(Check::new(
        "char-lower-tmv-0-iff-tmv-0",
        instance.clone(),
        Expected::Exactly(0),
        "mu_t^-(G) = 0 iff mu_t(G) = 0",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 1, |ctx, s| {
                Ok((solve_lower(ctx, Tmv, s)?.value == 0) != (solve_max(ctx, Tmv, s)?.value == 0))
            })
        },
    ));
    out.push(Check::new(
        "char-tmv-candidates-are-non-centers",
        instance.clone(),
        Expected::Exactly(0),
        "a vertex is excluded from every TMV set iff it is the center of a convex P_3",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 1, |ctx, _| {
                Ok(ctx.tmv_candidates() != ctx.convex_p3_centers().complement())
            })
        },
    ));
    out.push(Check::new(
        "char-lower-at-most-max",
        instance.clone(),
        Expected::Exactly(0),
        "lower numbers never exceed their maxima; gp <= mu and mu_t <= mu",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 1, |ctx, s| {
                let mut v = Vec::new();
                for kind in [Mv, Tmv, Gp] {
                    v.push((
                        solve_lower(ctx, kind, s)?.value,
                        solve_max(ctx, kind, s)?.value,
                    ));
                }
                Ok(v.iter().any(|(lo, hi)| lo > hi) || v[2].1 > v[0].1 || v[1].1 > v[0].1)
            })
        },
    ));
    out.push(Check::new(
        "char-neighborhood-lemma",
        instance.clone(),
        Expected::Exactly(0),
        "Neighborhood Lemma: certified N[x] is a maximal MV set, so mu^-(G) <= deg(x)+1",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 1, |ctx, s| {
                let lower = exact_lower_mv(ctx, s)?;
                for check in ctx.neighborhood_lemma_scan()? {
                    if let Some(bound) = check.bound {
                        let closed = ctx.graph().neighborhood(check.vertex, true)?;
                        if !ctx.is_valid_set(&closed, Mv)
                            || !ctx.is_maximal(&closed, Mv)?
                            || lower > bound
                        {
                            return Ok(true);
                        }
                    }
                }
                Ok(false)
            })
        },
    ));
    out.push(Check::new(
        "char-chordal-lower-mv-at-most-omega",
        instance.clone(),
        Expected::Exactly(0),
        "chordal graphs: mu^-(G) <= omega(G)",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 1, |ctx, s| {
                if !is_chordal(ctx.graph()) {
                    return Ok(false);
                }
                let omega = maximal_cliques(ctx.graph())?
                    .iter()
                    .map(VertexSet::len)
                    .max()
                    .unwrap_or(0);
                Ok(exact_lower_mv(ctx, s)? > omega)
            })
        },
    ));
    out.push(Check::new(
        "char-cograph-lower-mv-at-most-delta-plus-1",
        instance.clone(),
        Expected::Exactly(0),
        "non-trivial cographs have twins and mu^-(G) <= Delta(G)+1",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 2, |ctx, s| {
                let g = ctx.graph();
                if !is_p4_free(g) {
                    return Ok(false);
                }
                Ok(twins(g).is_empty() || exact_lower_mv(ctx, s)? > g.max_degree() + 1)
            })
        },
    ));
    out.push(Check::new(
        "char-cut-edge-implies-universal-line",
        instance.clone(),
        Expected::Exactly(0),
        "a graph with a cut-edge has a universal line",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 2, |ctx, _| {
                Ok(!bridges(ctx.graph()).is_empty() && ctx.has_universal_line()?.is_none())
            })
        },
    ));
    out.push(Check::new(
        "char-lower-gp-2-iff-universal-line",
        instance,
        Expected::Exactly(0),
        "gp^-(G) = 2 iff G has a universal line",
        |cfg: &SuiteConfig| {
            count_violations(cfg, 2, |ctx, s| {
                Ok((solve_lower(ctx, Gp, s)?.value == 2) != ctx.has_universal_line()?.is_some())
            })
        },
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_and_status_display() {
        assert!(Expected::AtLeast(4).admits(5) && !Expected::AtMost(2).admits(3));
        assert_eq!(Expected::AtLeast(4).to_string(), ">= 4");
        assert_eq!(
            CheckStatus::Skipped("cap".into()).to_string(),
            "SKIPPED (cap)"
        );
        assert_eq!("closed-forms".parse::<Suite>().unwrap(), Suite::ClosedForms);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn corpus_is_replayable() {
        let cfg = SuiteConfig::default();
        let corpus = cfg.corpus();
        assert_eq!(corpus.len(), 60);
        let a: Vec<Graph> = corpus.iter().map(|s| generate(s).unwrap()).collect();
        let b: Vec<Graph> = cfg.corpus().iter().map(|s| generate(s).unwrap()).collect();
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|g| (4..=9).contains(&g.n()) && g.is_connected()));
        assert!(cfg
            .block_graph_specs()
            .iter()
            .all(|s| generate(s).map(|g| g.n() <= 14).unwrap()));
    }

    #[test]
    fn p4_detection() {
        assert!(!is_p4_free(&generate(&FamilySpec::Path(4)).unwrap()));
        assert!(is_p4_free(
            &generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap()
        ));
        assert!(!is_p4_free(&generate(&FamilySpec::Cycle(5)).unwrap()));
    }

    #[test]
    fn every_expectation_is_cited() {
        let cfg = SuiteConfig::default();
        let mut checks = closed_form_checks(&cfg);
        checks.extend(matrix_checks());
        checks.extend(characterization_checks(&cfg));
        assert!(checks.iter().all(|c| !c.citation.trim().is_empty()));
    }

    #[test]
    fn oversized_matrix_is_skipped() {
        let cfg = SuiteConfig {
            matrix_cap: 4,
            ..SuiteConfig::default()
        };
        let reports = run_suite(Suite::Matrix, &cfg);
        let skipped = reports
            .iter()
            .filter(|r| matches!(r.status, CheckStatus::Skipped(_)))
            .count();
        assert!(skipped > 0);
        assert!(suite_passed(&reports), "{reports:#?}");
    }

    #[test]
    fn tight_cap_skips_instead_of_passing() {
        let cfg = SuiteConfig {
            solver: SolverConfig {
                cap: 3,
                ..SolverConfig::default()
            },
            ..SuiteConfig::default()
        };
        let check = &gstar_checks()[2];
        let report = check.execute(&cfg);
        assert!(
            matches!(report.status, CheckStatus::Skipped(_)),
            "{report:?}"
        );
        assert_eq!(report.computed, None);
    }
}
