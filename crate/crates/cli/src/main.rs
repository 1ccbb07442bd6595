//! `rdyn`: command-line front end for the r-dynamic coloring toolkit.
//!
//! Structured output is JSON on stdout, diagnostics go to stderr. Exit codes:
//! 0 success, 1 infeasible or no result, 2 input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rdyn_core::bounds::{bounds_report, BoundsInput};
use rdyn_core::coloring::{
    chi_exact_with_witness, find_bad_list_assignment, hyper_chi_strong_with_witness, neighborhood_color_count,
    satisfies, solve_list_coloring, Coloring, Limits, ListAssignment, Mode,
};
use rdyn_core::construction::verify_theorem2_small;
use rdyn_core::experiment::{experiment_random_graphs, ExperimentConfig, ExperimentMode, GraphModel};
use rdyn_core::generate::{generate, GraphKind};
use rdyn_core::graph::{Graph, Hypergraph};
use rdyn_core::greedy::greedy_r_dynamic;
use rdyn_core::io::{parse_graph, parse_hypergraph, serialize_graph};
use rdyn_core::lll::{theorem1_pipeline, LllError};

#[derive(Parser)]
#[command(name = "rdyn", version, about = "r-dynamic list coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a coloring against a graph.
    Check {
        #[arg(long)]
        graph: PathBuf,
        /// JSON array of colors indexed by vertex.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "dynamic")]
        mode: CheckMode,
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
    /// Color a graph from lists.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: SolveMode,
        /// JSON object mapping vertex id to its list.
        #[arg(long, conflicts_with = "k")]
        lists: Option<PathBuf>,
        /// Use the list {1..k} at every vertex.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_iters: Option<usize>,
        /// Sublist size for the lll pipeline.
        #[arg(long)]
        l: Option<usize>,
    },
    /// Exact chromatic number (proper, r-dynamic, or r-strong on a hypergraph).
    Chi {
        #[arg(long, required_unless_present = "hypergraph")]
        graph: Option<PathBuf>,
        #[arg(long, conflicts_with = "graph")]
        hypergraph: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: ChiMode,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Decide k-choosability by enumerating list assignments.
    Choosable {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "proper")]
        mode: CheckMode,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Augment a hypergraph, lift a strong coloring and check both chromatic bounds.
    Construct {
        #[arg(long)]
        hypergraph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Evaluate the degree-based bounds on ch_r.
    Bounds {
        /// Minimum degree.
        #[arg(long = "delta")]
        min_degree: usize,
        /// Maximum degree.
        #[arg(long = "Delta")]
        max_degree: usize,
        #[arg(long)]
        r: usize,
        /// ch(G) or an upper bound on it.
        #[arg(long)]
        l: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        f: Option<f64>,
    },
    /// Run seeded trials on random graphs.
    Experiment {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "d", conflicts_with = "d")]
        p: Option<f64>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "all")]
        mode: ExpMode,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        max_iters: Option<usize>,
    },
    /// Write a generated graph in the text format.
    Generate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Second side for complete bipartite graphs.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct LimitArgs {
    /// Raise the vertex cap of the exact solvers.
    #[arg(long)]
    max_vertices: Option<usize>,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(n) = self.max_vertices {
            l.max_chi_vertices = n;
            l.max_choosability_vertices = n;
        }
        l
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    Proper,
    Dynamic,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMode {
    Exact,
    Greedy,
    Lll,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiMode {
    Proper,
    Dynamic,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpMode {
    Greedy,
    Lll,
    Exact,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Cycle,
    Complete,
    Bipartite,
    Gnp,
    Regular,
}

struct Failure {
    code: u8,
    msg: String,
}

fn input_error(msg: impl ToString) -> Failure {
    Failure { code: 2, msg: msg.to_string() }
}

/// JSON document plus exit code.
struct Output {
    doc: Value,
    code: u8,
}

impl Output {
    fn ok(doc: Value) -> Self {
        Output { doc, code: 0 }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    parse_hypergraph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn mode_of(mode: CheckMode, r: usize) -> Result<Mode, Failure> {
    match mode {
        CheckMode::Proper => Ok(Mode::Proper),
        CheckMode::Dynamic if r == 0 => Err(input_error("r must be at least 1")),
        CheckMode::Dynamic => Ok(Mode::Dynamic(r)),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn check(graph: &Path, coloring: &Path, mode: CheckMode, r: usize) -> Result<Output, Failure> {
    let g = load_graph(graph)?;
    let c: Coloring = load_json(coloring)?;
    let mode = mode_of(mode, r)?;
    if c.len() != g.n() {
        return Err(input_error(format!("coloring has {} entries, graph has {} vertices", c.len(), g.n())));
    }
    let conflicts: Vec<[usize; 2]> = g.edges().filter(|&(u, v)| c[u] == c[v]).map(|(u, v)| [u, v]).collect();
    let starved: Vec<usize> = match mode {
        Mode::Proper => Vec::new(),
        Mode::Dynamic(r) => (0..g.n()).filter(|&v| neighborhood_color_count(&g, &c, v) < r.min(g.degree(v))).collect(),
    };
    let valid = conflicts.is_empty() && starved.is_empty();
    debug_assert_eq!(valid, satisfies(&g, &c, mode));
    Ok(Output {
        doc: json!({
            "mode": to_json(&mode),
            "valid": valid,
            "conflicting_edges": conflicts,
            "starved_vertices": starved,
        }),
        code: if valid { 0 } else { 1 },
    })
}

#[allow(clippy::too_many_arguments)]
fn solve(
    graph: &Path,
    mode: SolveMode,
    lists: Option<&Path>,
    k: Option<usize>,
    r: usize,
    seed: u64,
    max_iters: Option<usize>,
    l: Option<usize>,
) -> Result<Output, Failure> {
    let g = load_graph(graph)?;
    let lists = match (lists, k) {
        (Some(p), _) => load_json::<ListAssignment>(p)?,
        (None, Some(k)) if k > 0 => ListAssignment::uniform(g.n(), k),
        (None, Some(_)) => return Err(input_error("k must be positive")),
        (None, None) => return Err(input_error("one of --lists or --k is required")),
    };
    if lists.len() != g.n() {
        return Err(input_error(format!("{} lists for {} vertices", lists.len(), g.n())));
    }
    if r == 0 {
        return Err(input_error("r must be at least 1"));
    }
    let colored = |c: Option<Coloring>| match c {
        Some(c) => Output::ok(json!({ "status": "colored", "coloring": c })),
        None => Output { doc: json!({ "status": "none" }), code: 1 },
    };
    match mode {
        SolveMode::Exact => {
            let c = solve_list_coloring(&g, &lists, Mode::Dynamic(r)).map_err(input_error)?;
            Ok(colored(c))
        }
        SolveMode::Greedy => {
            let c = greedy_r_dynamic(&g, &lists, r, None).map_err(input_error)?;
            Ok(colored(Some(c)))
        }
        SolveMode::Lll => {
            let l = l.ok_or_else(|| input_error("--l is required for the lll pipeline"))?;
            let report = theorem1_pipeline(&g, &lists, l, r, seed, max_iters).map_err(|e| match e {
                LllError::PostconditionFailed(_) => Failure { code: 1, msg: e.to_string() },
                e => input_error(e),
            })?;
            let code = if report.coloring().is_some() { 0 } else { 1 };
            Ok(Output { doc: to_json(&report), code })
        }
    }
}

fn chi(
    graph: Option<&Path>,
    hypergraph: Option<&Path>,
    mode: ChiMode,
    r: usize,
    limits: &Limits,
) -> Result<Output, Failure> {
    if r == 0 {
        return Err(input_error("r must be at least 1"));
    }
    let (value, witness, label) = match (mode, hypergraph, graph) {
        (ChiMode::Strong, Some(h), _) => {
            let h = load_hypergraph(h)?;
            let (k, c) = hyper_chi_strong_with_witness(&h, r, limits).map_err(input_error)?;
            (k, c, "strong")
        }
        (ChiMode::Strong, None, _) => return Err(input_error("strong mode needs --hypergraph")),
        (_, _, None) => return Err(input_error("proper and dynamic modes need --graph")),
        (m, _, Some(g)) => {
            let g = load_graph(g)?;
            let (mode, label) = match m {
                ChiMode::Proper => (Mode::Proper, "proper"),
                _ => (Mode::Dynamic(r), "dynamic"),
            };
            let (k, c) = chi_exact_with_witness(&g, mode, limits).map_err(input_error)?;
            (k, c, label)
        }
    };
    Ok(Output::ok(json!({ "mode": label, "r": r, "chi": value, "witness": witness })))
}

fn choosable(graph: &Path, k: usize, mode: CheckMode, r: usize, limits: &Limits) -> Result<Output, Failure> {
    let g = load_graph(graph)?;
    let mode = mode_of(mode, r)?;
    let bad = if k == 0 { None } else { find_bad_list_assignment(&g, k, mode, limits).map_err(input_error)? };
    // With empty lists only the empty graph is colorable.
    let is = if k == 0 { g.n() == 0 } else { bad.is_none() };
    Ok(Output::ok(json!({
        "k": k,
        "mode": to_json(&mode),
        "choosable": is,
        "bad_assignment": bad.map(|b| to_json(&b)),
    })))
}

fn construct(path: &Path, r: usize, k: usize, seed: u64, limits: &Limits) -> Result<Output, Failure> {
    let h = load_hypergraph(path)?;
    let report = verify_theorem2_small(&h, r, k, seed, limits).map_err(input_error)?;
    let ok = report.lifted_valid && report.lower_bound_holds && report.upper_bound_holds;
    Ok(Output { doc: to_json(&report), code: if ok { 0 } else { 1 } })
}

fn generate_graph(
    kind: KindArg,
    n: usize,
    m: Option<usize>,
    p: Option<f64>,
    d: Option<usize>,
    seed: u64,
) -> Result<String, Failure> {
    let need = |what: &str| input_error(format!("--{what} is required for this kind"));
    let kind = match kind {
        KindArg::Cycle => GraphKind::Cycle { n },
        KindArg::Complete => GraphKind::Complete { n },
        KindArg::Bipartite => GraphKind::CompleteBipartite { a: n, b: m.ok_or_else(|| need("m"))? },
        KindArg::Gnp => GraphKind::Gnp { n, p: p.ok_or_else(|| need("p"))? },
        KindArg::Regular => GraphKind::RandomRegular { n, d: d.ok_or_else(|| need("d"))? },
    };
    let g = generate(kind, seed).map_err(input_error)?;
    Ok(serialize_graph(&g))
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Check { graph, coloring, mode, r } => check(&graph, &coloring, mode, r),
        Command::Solve { graph, mode, lists, k, r, seed, max_iters, l } => {
            solve(&graph, mode, lists.as_deref(), k, r, seed, max_iters, l)
        }
        Command::Chi { graph, hypergraph, mode, r, limits } => {
            chi(graph.as_deref(), hypergraph.as_deref(), mode, r, &limits.limits())
        }
        Command::Choosable { graph, k, mode, r, limits } => choosable(&graph, k, mode, r, &limits.limits()),
        Command::Construct { hypergraph, r, k, seed, limits } => construct(&hypergraph, r, k, seed, &limits.limits()),
        Command::Bounds { min_degree, max_degree, r, l, s, n, p, f } => {
            let report =
                bounds_report(&BoundsInput { max_degree, min_degree, r, l, s, n, p, f }).map_err(input_error)?;
            Ok(Output::ok(to_json(&report)))
        }
        Command::Experiment { n, p, d, r, trials, seed, mode, l, s, max_iters } => {
            let model = match (p, d) {
                (Some(p), _) => GraphModel::Gnp { p },
                (None, Some(d)) => GraphModel::Regular { d },
                (None, None) => return Err(input_error("one of --p or --d is required")),
            };
            let mode = match mode {
                ExpMode::Greedy => ExperimentMode::Greedy,
                ExpMode::Lll => ExperimentMode::Lll,
                ExpMode::Exact => ExperimentMode::Exact,
                ExpMode::All => ExperimentMode::All,
            };
            let mut config = ExperimentConfig::new(n, model, r, trials, seed, mode);
            config.l = l.unwrap_or(config.l);
            config.s = s.unwrap_or(config.s);
            config.max_iters = max_iters;
            let report = experiment_random_graphs(&config).map_err(input_error)?;
            Ok(Output::ok(to_json(&report)))
        }
        Command::Generate { .. } => unreachable!("handled before dispatch"),
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Generate { kind, n, m, p, d, seed } = cli.command {
        return match generate_graph(kind, n, m, p, d, seed) {
            Ok(text) => {
                emit(&text);
                ExitCode::SUCCESS
            }
            Err(f) => {
                eprintln!("error: {}", f.msg);
                ExitCode::from(f.code)
            }
        };
    }
    match run(cli.command) {
        Ok(out) => {
            emit(&format!("{}\n", serde_json::to_string_pretty(&out.doc).expect("valid JSON value")));
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
