mod input;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vislab_core::families::{gen_gadget, gen_gstar, gen_subdivided_complete, generate};
use vislab_core::graph::{export_dot, write_edge_list};
use vislab_core::solvers::{greedy_profile, solve_lower, solve_max};
use vislab_core::theorems::{run_suite, suite_passed};
use vislab_core::{
    CheckReport, FamilySpec, GadgetMap, Graph, InvariantKind, SolverConfig, Suite, SuiteConfig,
    Variant, VertexSet, VisibilityContext,
};

use input::{describe_set, load, parse_set, product_comment};

/// Mutual-visibility, total mutual-visibility and general position in graphs.
#[derive(Parser)]
#[command(name = "vislab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family as an edge list.
    Gen {
        /// Write the vertex role map ("vertex-id role" lines) to this file.
        #[arg(long, global = true)]
        roles: Option<PathBuf>,
        #[command(subcommand)]
        family: Family,
    },
    /// Compute an exact invariant and a canonical witness.
    Solve {
        #[arg(long)]
        kind: InvariantKind,
        #[arg(long, default_value = "max")]
        variant: Variant,
        /// Search exhaustively even when the graph has a cut-edge.
        #[arg(long)]
        no_fast_path: bool,
        /// Ignore the branching-vertex cap.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = vislab_core::solvers::DEFAULT_CAP)]
        cap: usize,
        graph: Option<PathBuf>,
    },
    /// Build maximal sets greedily from seeded vertex orders.
    Greedy {
        #[arg(long)]
        kind: InvariantKind,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        graph: Option<PathBuf>,
    },
    /// Test whether a vertex set is valid (and maximal).
    Check {
        #[arg(long)]
        kind: InvariantKind,
        /// Comma-separated vertex ids.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        maximal: bool,
        graph: Option<PathBuf>,
    },
    /// Replay the closed-form and characterization checks.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print a graph as DOT (or as a normalized edge list without `--dot`).
    Export {
        #[arg(long)]
        dot: bool,
        /// Comma-separated vertex ids to fill.
        #[arg(long)]
        highlight: Option<String>,
        graph: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Complete bipartite `K_{r,s}`.
    Bipartite {
        r: usize,
        s: usize,
    },
    /// Star `K_{1,k}`.
    Star {
        k: usize,
    },
    /// Grid `P_{d1} x P_{d2} x ...`.
    Grid {
        #[arg(required = true, num_args = 1..)]
        dims: Vec<usize>,
    },
    Hypercube {
        k: usize,
    },
    /// `K_m x K_n`.
    Kprod {
        m: usize,
        n: usize,
    },
    /// `K_n` with every edge subdivided once.
    Skn {
        n: usize,
    },
    /// Uniform random labeled tree (Prüfer sequence).
    Tree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random block graph grown from complete blocks.
    Block {
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_block: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Connected `G(n, p)` with `p = permille / 1000`.
    Gnp {
        n: usize,
        #[arg(long, default_value_t = 400)]
        permille: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hardness-reduction gadget built on the graph in a file.
    Gadget {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    /// The separating graph G*: `--b` hub-side vertices and cliques of sizes t t' t''.
    Gstar {
        #[arg(long)]
        b: usize,
        #[arg(long, num_args = 3, value_names = ["T", "T1", "T2"])]
        t: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Tsv,
}

/// Command outcome: a failed verification exits 1, any error exits 2.
enum Failure {
    Verify,
    Error(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn gen(family: Family, roles_path: Option<&Path>) -> Outcome {
    let spec = match family {
        Family::Path { n } => FamilySpec::Path(n),
        Family::Cycle { n } => FamilySpec::Cycle(n),
        Family::Complete { n } => FamilySpec::Complete(n),
        Family::Bipartite { r, s } => FamilySpec::CompleteBipartite(r, s),
        Family::Star { k } => FamilySpec::Star(k),
        Family::Grid { dims } => FamilySpec::Grid(dims),
        Family::Hypercube { k } => FamilySpec::Hypercube(k),
        Family::Kprod { m, n } => FamilySpec::CliqueProduct(m, n),
        Family::Tree { n, seed } => FamilySpec::RandomTree { n, seed },
        Family::Block { n, max_block, seed } => FamilySpec::RandomBlockGraph { n, max_block, seed },
        Family::Gnp { n, permille, seed } => FamilySpec::RandomConnected {
            n,
            edge_permille: permille,
            seed,
        },
        Family::Skn { n } => {
            let (g, roles) = gen_subdivided_complete(n)?;
            return emit_with_roles(&g, &roles, vec![format!("S(K_{n})")], roles_path);
        }
        Family::Gadget { graph, t } => {
            let base = load(Some(&graph)).map_err(Failure::Error)?;
            let (g, roles) = gen_gadget(&base.graph, t)?;
            let comment = format!(
                "gadget t={t} on {} vertices, {} edges",
                base.graph.n(),
                base.graph.edge_count()
            );
            return emit_with_roles(&g, &roles, vec![comment], roles_path);
        }
        Family::Gstar { b, t } => {
            let (g, roles) = gen_gstar(b, t[0], t[1], t[2])?;
            let comment = format!("G* b={b} t={} t'={} t''={}", t[0], t[1], t[2]);
            return emit_with_roles(&g, &roles, vec![comment], roles_path);
        }
    };
    if roles_path.is_some() {
        return Err(Failure::Error(format!("{spec} has no role map")));
    }
    let g = generate(&spec)?;
    let mut comments = vec![spec.to_string()];
    if let Some(dims) = spec.product_dims() {
        comments.push(product_comment(&dims));
    }
    Ok(write_edge_list(&g, &comments))
}

fn emit_with_roles(
    g: &Graph,
    roles: &GadgetMap,
    comments: Vec<String>,
    path: Option<&Path>,
) -> Outcome {
    if let Some(p) = path {
        fs::write(p, roles.to_string())?;
    }
    Ok(write_edge_list(g, &comments))
}

fn solve(
    kind: InvariantKind,
    variant: Variant,
    cfg: SolverConfig,
    graph: Option<&Path>,
) -> Outcome {
    let loaded = load(graph).map_err(Failure::Error)?;
    let ctx = VisibilityContext::new(loaded.graph);
    let out = match variant {
        Variant::Max => solve_max(&ctx, kind, &cfg)?,
        Variant::Lower => solve_lower(&ctx, kind, &cfg)?,
    };
    eprintln!("nodes {} elapsed {:.3?}", out.nodes_explored, out.elapsed);
    let mut text = format!(
        "{}\nwitness {}\n",
        out.value,
        describe_set(&out.witness, loaded.product.as_deref())
    );
    if let Some(tag) = out.fast_path {
        text.push_str(&format!("fast-path {tag}\n"));
    }
    Ok(text)
}

fn greedy(kind: InvariantKind, runs: usize, seed: u64, graph: Option<&Path>) -> Outcome {
    if runs == 0 {
        return Err(Failure::Error("--runs must be at least 1".into()));
    }
    let loaded = load(graph).map_err(Failure::Error)?;
    let ctx = VisibilityContext::new(loaded.graph);
    let p = greedy_profile(&ctx, kind, runs, seed)?;
    Ok(format!(
        "min {}\nmax {}\nwitness {}\n",
        p.min_size,
        p.max_size,
        describe_set(&p.best_min_witness, loaded.product.as_deref())
    ))
}

fn check(kind: InvariantKind, set: &str, maximal: bool, graph: Option<&Path>) -> Outcome {
    let loaded = load(graph).map_err(Failure::Error)?;
    let x = parse_set(set, loaded.graph.n())?;
    let ctx = VisibilityContext::new(loaded.graph);
    if !ctx.is_valid_set(&x, kind) {
        return Ok("invalid\n".into());
    }
    if !maximal {
        return Ok("valid\n".into());
    }
    Ok(if ctx.is_maximal(&x, kind)? {
        "valid maximal\n"
    } else {
        "valid not-maximal\n"
    }
    .into())
}

fn verify(suite: Suite, format: Format) -> Outcome {
    let reports = run_suite(suite, &SuiteConfig::default());
    let text = match format {
        Format::Table => table(&reports),
        Format::Tsv => reports
            .iter()
            .map(|r| {
                format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    r.name,
                    r.instance,
                    r.expected,
                    r.computed_str(),
                    r.status
                )
            })
            .collect(),
    };
    print!("{text}");
    if suite_passed(&reports) {
        Ok(String::new())
    } else {
        Err(Failure::Verify)
    }
}

fn table(reports: &[CheckReport]) -> String {
    let width = |f: &dyn Fn(&CheckReport) -> usize, title: &str| {
        reports.iter().map(f).max().unwrap_or(0).max(title.len())
    };
    let wn = width(&|r| r.name.len(), "check");
    let wi = width(&|r| r.instance.chars().count(), "instance");
    let we = width(&|r| r.expected.to_string().len(), "expected");
    let wc = width(&|r| r.computed_str().len(), "computed");
    let mut out = format!(
        "{:<wn$}  {:<wi$}  {:>we$}  {:>wc$}  status\n",
        "check", "instance", "expected", "computed"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<wn$}  {:<wi$}  {:>we$}  {:>wc$}  {}\n",
            r.name,
            r.instance,
            r.expected.to_string(),
            r.computed_str(),
            r.status
        ));
        if let (true, Some(detail)) = (r.failed(), &r.detail) {
            out.push_str(&format!("{:wn$}  {detail}\n", ""));
        }
    }
    let failed = reports.iter().filter(|r| r.failed()).count();
    let skipped = reports
        .iter()
        .filter(|r| !r.failed() && !r.passed())
        .count();
    out.push_str(&format!(
        "{} checks: {} passed, {failed} failed, {skipped} skipped\n",
        reports.len(),
        reports.len() - failed - skipped
    ));
    out
}

fn export(dot: bool, highlight: Option<&str>, graph: Option<&Path>) -> Outcome {
    let loaded = load(graph).map_err(Failure::Error)?;
    let n = loaded.graph.n();
    if !dot {
        if highlight.is_some() {
            return Err(Failure::Error("--highlight needs --dot".into()));
        }
        let comments = loaded
            .product
            .map(|d| vec![product_comment(&d)])
            .unwrap_or_default();
        return Ok(write_edge_list(&loaded.graph, &comments));
    }
    let marked = match highlight {
        Some(ids) => parse_set(ids, n)?,
        None => VertexSet::new(n),
    };
    Ok(export_dot(&loaded.graph, &marked))
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("VISLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("VISLAB_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { roles, family } => gen(family, roles.as_deref()),
        Command::Solve {
            kind,
            variant,
            no_fast_path,
            force,
            cap,
            graph,
        } => {
            let cfg = SolverConfig {
                cap,
                force,
                fast_path: !no_fast_path,
            };
            solve(kind, variant, cfg, graph.as_deref())
        }
        Command::Greedy {
            kind,
            runs,
            seed,
            graph,
        } => greedy(kind, runs, seed, graph.as_deref()),
        Command::Check {
            kind,
            set,
            maximal,
            graph,
        } => check(kind, &set, maximal, graph.as_deref()),
        Command::Verify { suite, format } => verify(suite, format),
        Command::Export {
            dot,
            highlight,
            graph,
        } => export(dot, highlight.as_deref(), graph.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Error(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
