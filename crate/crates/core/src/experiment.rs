//! Seeded experiments over random graphs.
//!
//! Every trial draws its own graph and lists from a seed derived from the
//! experiment seed and the trial index, so trials are independent of each
//! other and of the order they run in.

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{chi_exact, is_r_dynamic, Color, ColoringError, Limits, ListAssignment, Mode};
use crate::generate::{generate, rng_from_seed, GraphKind};
use crate::graph::{Graph, GraphError};
use crate::greedy::greedy_r_dynamic;
use crate::lll::{theorem1_pipeline, LllError, PipelineOutcome};

#[derive(Error, Debug)]
pub enum ExperimentError {
    #[error("invalid experiment parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Lll(#[from] LllError),
    #[error("internal defect in trial {trial}: {msg}")]
    Defect { trial: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum GraphModel {
    Gnp { p: f64 },
    Regular { d: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentMode {
    Greedy,
    Lll,
    Exact,
    All,
}

impl ExperimentMode {
    fn greedy(self) -> bool {
        matches!(self, Self::Greedy | Self::All)
    }
    fn lll(self) -> bool {
        matches!(self, Self::Lll | Self::All)
    }
    fn exact(self) -> bool {
        matches!(self, Self::Exact | Self::All)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    #[serde(flatten)]
    pub model: GraphModel,
    pub r: usize,
    pub trials: usize,
    pub seed: u64,
    pub mode: ExperimentMode,
    /// Sublist size for the pipeline.
    pub l: usize,
    /// Pipeline lists have size `l + s + r - 2`.
    pub s: usize,
    pub max_iters: Option<usize>,
    /// Largest `n` for which exact `χ_r` is computed.
    pub exact_max_n: usize,
}

impl ExperimentConfig {
    pub fn new(n: usize, model: GraphModel, r: usize, trials: usize, seed: u64, mode: ExperimentMode) -> Self {
        ExperimentConfig {
            n,
            model,
            r,
            trials,
            seed,
            mode,
            l: 3,
            s: r.saturating_sub(1).max(1),
            max_iters: None,
            exact_max_n: Limits::default().max_chi_vertices,
        }
    }

    fn validate(&self) -> Result<(), ExperimentError> {
        let bad = |m: String| Err(ExperimentError::InvalidParams(m));
        if self.r == 0 {
            return bad("r must be at least 1".into());
        }
        if self.mode.lll() {
            if self.r < 2 {
                return bad("the pipeline needs r >= 2".into());
            }
            if self.l == 0 {
                return bad("l must be positive".into());
            }
            if self.s + 1 < self.r {
                return bad(format!("s = {} must be at least r - 1 = {}", self.s, self.r - 1));
            }
        }
        match self.model {
            GraphModel::Gnp { p } if !(0.0..=1.0).contains(&p) => bad(format!("p = {p} outside [0, 1]")),
            GraphModel::Regular { d } if d >= self.n.max(1) || (self.n * d) % 2 == 1 => {
                bad(format!("no {d}-regular graph on {} vertices", self.n))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GreedyRecord {
    pub list_size: usize,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineRecord {
    /// `colored`, `resample_cap_reached`, `list_coloring_failed` or `skipped`.
    pub status: &'static str,
    pub iterations: Option<usize>,
    pub verified: Option<bool>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    pub seed: u64,
    pub edges: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub greedy: Option<GreedyRecord>,
    pub pipeline: Option<PipelineRecord>,
    pub chi_dynamic: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct Summary {
    pub trials: usize,
    pub greedy_runs: usize,
    pub greedy_successes: usize,
    pub greedy_success_rate: Option<f64>,
    pub pipeline_colored: usize,
    pub pipeline_cap_reached: usize,
    pub pipeline_list_coloring_failed: usize,
    pub pipeline_skipped: usize,
    pub pipeline_mean_iterations: Option<f64>,
    pub exact_computed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub trials: Vec<TrialRecord>,
    pub summary: Summary,
}

/// Seed for trial `index`; a SplitMix64 step keeps neighboring indices apart.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform random `size`-subsets of `1..=2·size`.
pub fn random_lists<R: Rng>(n: usize, size: usize, rng: &mut R) -> ListAssignment {
    let lists = (0..n).map(|_| sample(rng, 2 * size, size).into_iter().map(|c| c as Color + 1).collect()).collect();
    ListAssignment::new(lists).expect("size >= 1")
}

fn draw_graph(config: &ExperimentConfig, seed: u64) -> Result<Graph, GraphError> {
    let kind = match config.model {
        GraphModel::Gnp { p } => GraphKind::Gnp { n: config.n, p },
        GraphModel::Regular { d } => GraphKind::RandomRegular { n: config.n, d },
    };
    generate(kind, seed)
}

fn run_trial(config: &ExperimentConfig, index: usize) -> Result<TrialRecord, ExperimentError> {
    let seed = trial_seed(config.seed, index);
    let g = draw_graph(config, seed)?;
    let mut list_rng = rng_from_seed(seed ^ 0x6C69_7374);
    let stats = g.degree_stats();
    let mut record = TrialRecord {
        index,
        seed,
        edges: g.edge_count(),
        max_degree: stats.max_degree,
        min_degree: stats.min_degree,
        greedy: None,
        pipeline: None,
        chi_dynamic: None,
    };
    let r = config.r;

    if config.mode.greedy() {
        let size = r * stats.max_degree + 1;
        let lists = random_lists(g.n(), size, &mut list_rng);
        let success = greedy_r_dynamic(&g, &lists, r, None).is_ok_and(|c| is_r_dynamic(&g, &c, r));
        record.greedy = Some(GreedyRecord { list_size: size, success });
    }

    if config.mode.lll() {
        let size = config.l + config.s + r - 2;
        let lists = random_lists(g.n(), size, &mut list_rng);
        record.pipeline = Some(if g.n() == 0 || stats.min_degree < r {
            PipelineRecord {
                status: "skipped",
                iterations: None,
                verified: None,
                note: Some(format!("minimum degree {} below r = {r}", stats.min_degree)),
            }
        } else {
            let report = theorem1_pipeline(&g, &lists, config.l, r, seed ^ 0x6C6C_6C00, config.max_iters)?;
            let (status, verified) = match &report.outcome {
                PipelineOutcome::Colored { coloring } => {
                    if !(lists.admits(coloring) && is_r_dynamic(&g, coloring, r)) {
                        return Err(ExperimentError::Defect { trial: index, msg: "invalid pipeline coloring".into() });
                    }
                    ("colored", Some(true))
                }
                PipelineOutcome::ResampleCapReached => ("resample_cap_reached", None),
                PipelineOutcome::ListColoringFailed => ("list_coloring_failed", None),
            };
            PipelineRecord { status, iterations: Some(report.log.iterations), verified, note: None }
        });
    }

    if config.mode.exact() && g.n() <= config.exact_max_n {
        let limits = Limits { max_chi_vertices: config.exact_max_n, ..Limits::default() };
        record.chi_dynamic = Some(chi_exact(&g, Mode::Dynamic(r), &limits)?);
    }
    Ok(record)
}

fn summarize(trials: &[TrialRecord]) -> Summary {
    let mut s = Summary { trials: trials.len(), ..Summary::default() };
    let mut iterations = Vec::new();
    for t in trials {
        if let Some(g) = &t.greedy {
            s.greedy_runs += 1;
            s.greedy_successes += g.success as usize;
        }
        if let Some(p) = &t.pipeline {
            match p.status {
                "colored" => s.pipeline_colored += 1,
                "resample_cap_reached" => s.pipeline_cap_reached += 1,
                "list_coloring_failed" => s.pipeline_list_coloring_failed += 1,
                _ => s.pipeline_skipped += 1,
            }
            iterations.extend(p.iterations);
        }
        s.exact_computed += t.chi_dynamic.is_some() as usize;
    }
    if s.greedy_runs > 0 {
        s.greedy_success_rate = Some(s.greedy_successes as f64 / s.greedy_runs as f64);
    }
    if !iterations.is_empty() {
        s.pipeline_mean_iterations = Some(iterations.iter().sum::<usize>() as f64 / iterations.len() as f64);
    }
    s
}

pub fn experiment_random_graphs(config: &ExperimentConfig) -> Result<ExperimentReport, ExperimentError> {
    config.validate()?;
    let trials = (0..config.trials).map(|i| run_trial(config, i)).collect::<Result<Vec<_>, _>>()?;
    let summary = summarize(&trials);
    Ok(ExperimentReport { config: config.clone(), trials, summary })
}
