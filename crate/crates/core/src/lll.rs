//! Sublist selection by resampling.
//!
//! Every vertex has a list of `l + s + r - 2` colors. We keep a random
//! `l`-subset of each list and call vertex `v` *bad* when some `r - 1` colors
//! meet the kept sublist of every neighbor of `v`. While a bad vertex exists,
//! the sublists of its neighbors (the only random choices its event depends
//! on) are redrawn. Once no vertex is bad, any proper coloring from the
//! sublists is r-dynamic: the colors it puts on `N(v)` hit every neighbor's
//! sublist, so there must be at least `r` of them.

use rand::seq::index::sample;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{is_r_dynamic, solve_list_coloring, Color, Coloring, ColoringError, ListAssignment, Mode};
use crate::generate::rng_from_seed;
use crate::graph::{Graph, Hypergraph};
use crate::transversal::{has_small_transversal, Method, TransversalError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LllError {
    #[error("vertex {vertex} has {size} colors, fewer than l = {l}")]
    ListTooSmall { vertex: usize, size: usize, l: usize },
    #[error("vertex {0} is isolated")]
    Isolated(usize),
    #[error("vertex {vertex} has degree {degree} < r = {r}")]
    LowDegree { vertex: usize, degree: usize, r: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("internal defect: coloring from clear sublists is not {0}-dynamic")]
    PostconditionFailed(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Transversal(#[from] TransversalError),
}

/// Base lists, current sublists and the random stream that produced them.
#[derive(Debug, Clone)]
pub struct SublistState {
    base: ListAssignment,
    sub: ListAssignment,
    l: usize,
    seed: u64,
    draws: u64,
    rng: ChaCha8Rng,
}

impl SublistState {
    /// Draws an independent uniform `l`-subset of every list.
    pub fn sample(base: ListAssignment, l: usize, seed: u64) -> Result<Self, LllError> {
        if l == 0 {
            return Err(LllError::InvalidParams("l must be positive".into()));
        }
        if let Some(v) = (0..base.len()).find(|&v| base.list(v).len() < l) {
            return Err(LllError::ListTooSmall { vertex: v, size: base.list(v).len(), l });
        }
        let mut state = SublistState { sub: base.clone(), base, l, seed, draws: 0, rng: rng_from_seed(seed) };
        for v in 0..state.base.len() {
            state.redraw(v);
        }
        Ok(state)
    }

    /// A state with hand-picked sublists (the stream restarts from `seed`).
    pub fn from_parts(base: ListAssignment, sub: ListAssignment, seed: u64) -> Result<Self, LllError> {
        let l = sub.uniform_size().ok_or_else(|| LllError::InvalidParams("sublists must share one size".into()))?;
        if !sub.is_subassignment_of(&base) {
            return Err(LllError::InvalidParams("sublists must lie inside the base lists".into()));
        }
        Ok(SublistState { base, sub, l, seed, draws: 0, rng: rng_from_seed(seed) })
    }

    fn redraw(&mut self, v: usize) {
        let list = self.base.list(v);
        let mut picked: Vec<Color> = sample(&mut self.rng, list.len(), self.l).into_iter().map(|i| list[i]).collect();
        picked.sort_unstable();
        self.sub.set_list(v, picked);
        self.draws += 1;
    }

    pub fn base(&self) -> &ListAssignment {
        &self.base
    }

    pub fn sublists(&self) -> &ListAssignment {
        &self.sub
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of single-vertex redraws so far, the initial sample included.
    pub fn draws(&self) -> u64 {
        self.draws
    }
}

pub fn sample_sublists(base: ListAssignment, l: usize, seed: u64) -> Result<SublistState, LllError> {
    SublistState::sample(base, l, seed)
}

/// Hypergraph on the colors seen around `v`: one edge per neighbor `w`, equal to
/// the list of `w`. Colors are relabelled `0..colors.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorHypergraph {
    pub hypergraph: Hypergraph,
    /// `colors[i]` is the color behind hypergraph vertex `i`.
    pub colors: Vec<Color>,
}

impl ColorHypergraph {
    pub fn edge_colors(&self, i: usize) -> Vec<Color> {
        self.hypergraph.edge(i).iter().map(|&x| self.colors[x]).collect()
    }
}

pub fn neighborhood_color_hypergraph(g: &Graph, lists: &ListAssignment, v: usize) -> Result<ColorHypergraph, LllError> {
    let nbrs = g.neighbors(v);
    if nbrs.is_empty() {
        return Err(LllError::Isolated(v));
    }
    let mut colors: Vec<Color> = nbrs.iter().flat_map(|&w| lists.list(w).iter().copied()).collect();
    colors.sort_unstable();
    colors.dedup();
    let index = |c: &Color| colors.binary_search(c).expect("color collected above");
    let edges: Vec<Vec<usize>> = nbrs.iter().map(|&w| lists.list(w).iter().map(index).collect()).collect();
    let hypergraph = Hypergraph::new(colors.len(), edges).expect("indices in range");
    Ok(ColorHypergraph { hypergraph, colors })
}

/// Whether `r - 1` colors suffice to meet the sublist of every neighbor of `v`.
pub fn bad_event_holds(g: &Graph, state: &SublistState, v: usize, r: usize) -> Result<bool, LllError> {
    if r < 2 {
        return Err(LllError::InvalidParams(format!("r = {r} must be at least 2")));
    }
    if g.degree(v) < r {
        return Err(LllError::LowDegree { vertex: v, degree: g.degree(v), r });
    }
    let h = neighborhood_color_hypergraph(g, state.sublists(), v)?;
    Ok(has_small_transversal(&h.hypergraph, r - 1, Method::Candidates)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResampleStatus {
    Clear,
    CapReached,
}

/// One entry per scan of the vertices: the bad vertices found. The first of
/// them is the one resampled, except on the final scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResampleLog {
    pub iterations: usize,
    pub violations_per_sweep: Vec<Vec<usize>>,
    pub status: ResampleStatus,
}

/// `ceil(10 · n · (r - 1) · ln(max(Δ, 2)))`.
pub fn default_max_iters(g: &Graph, r: usize) -> usize {
    let delta = g.max_degree().max(2) as f64;
    (10.0 * g.n() as f64 * (r.saturating_sub(1)) as f64 * delta.ln()).ceil() as usize
}

fn violated(g: &Graph, state: &SublistState, r: usize) -> Result<Vec<usize>, LllError> {
    let mut out = Vec::new();
    for v in (0..g.n()).filter(|&v| g.degree(v) >= r) {
        if bad_event_holds(g, state, v, r)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// Scans vertices in id order and redraws the neighborhood sublists of the
/// first bad vertex, until none is bad or `max_iters` redraws have been made.
/// Vertices of degree below `r` are not checked.
pub fn resample_until_clear(
    g: &Graph,
    mut state: SublistState,
    r: usize,
    max_iters: usize,
) -> Result<(SublistState, ResampleLog), LllError> {
    if state.base.len() != g.n() {
        return Err(LllError::InvalidParams(format!("{} lists for {} vertices", state.base.len(), g.n())));
    }
    let mut log = ResampleLog { iterations: 0, violations_per_sweep: Vec::new(), status: ResampleStatus::Clear };
    loop {
        let bad = violated(g, &state, r)?;
        let first = bad.first().copied();
        log.violations_per_sweep.push(bad);
        let Some(v) = first else {
            return Ok((state, log));
        };
        if log.iterations >= max_iters {
            log.status = ResampleStatus::CapReached;
            return Ok((state, log));
        }
        for &w in g.neighbors(v) {
            state.redraw(w);
        }
        log.iterations += 1;
    }
}

/// Proper coloring from the current sublists, checked to be r-dynamic.
/// `None` when the sublists admit no proper coloring at all.
pub fn color_from_sublists(g: &Graph, state: &SublistState, r: usize) -> Result<Option<Coloring>, LllError> {
    let Some(c) = solve_list_coloring(g, state.sublists(), Mode::Proper)? else {
        return Ok(None);
    };
    if !is_r_dynamic(g, &c, r) {
        return Err(LllError::PostconditionFailed(r));
    }
    Ok(Some(c))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PipelineOutcome {
    Colored {
        coloring: Coloring,
    },
    /// Resampling hit its iteration cap.
    ResampleCapReached,
    /// Sublists were clear but admit no proper coloring, so `l < ch(G)`.
    ListColoringFailed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub l: usize,
    pub s: usize,
    pub r: usize,
    pub outcome: PipelineOutcome,
    pub log: ResampleLog,
    pub draws: u64,
}

impl PipelineReport {
    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.outcome {
            PipelineOutcome::Colored { coloring } => Some(coloring),
            _ => None,
        }
    }
}

/// Sample sublists of size `l`, resample until clear, then color properly
/// from the sublists. Lists must all have size `l + s + r - 2` with
/// `s >= r - 1`, and every vertex needs degree at least `r`.
pub fn theorem1_pipeline(
    g: &Graph,
    lists: &ListAssignment,
    l: usize,
    r: usize,
    seed: u64,
    max_iters: Option<usize>,
) -> Result<PipelineReport, LllError> {
    if r < 2 {
        return Err(LllError::InvalidParams(format!("r = {r} must be at least 2")));
    }
    if l == 0 {
        return Err(LllError::InvalidParams("l must be positive".into()));
    }
    lists.check_for(g.n())?;
    let size = lists.uniform_size().ok_or_else(|| LllError::InvalidParams("lists must share one size".into()))?;
    if size + 2 < l + r || size + 2 - l - r < r - 1 {
        return Err(LllError::InvalidParams(format!(
            "list size {size} must be l + s + r - 2 with s >= r - 1 (l = {l}, r = {r})"
        )));
    }
    let s = size + 2 - l - r;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < r) {
        return Err(LllError::LowDegree { vertex: v, degree: g.degree(v), r });
    }
    let max_iters = max_iters.unwrap_or_else(|| default_max_iters(g, r));
    let state = SublistState::sample(lists.clone(), l, seed)?;
    let (state, log) = resample_until_clear(g, state, r, max_iters)?;
    let outcome = match log.status {
        ResampleStatus::CapReached => PipelineOutcome::ResampleCapReached,
        ResampleStatus::Clear => match color_from_sublists(g, &state, r)? {
            Some(coloring) => PipelineOutcome::Colored { coloring },
            None => PipelineOutcome::ListColoringFailed,
        },
    };
    Ok(PipelineReport { l, s, r, outcome, log, draws: state.draws() })
}

/// Left-hand side of the degree condition:
/// `((r+1) ln Δ + (r-1) ln r + 1) · ((l+s)/s)^(r-1)`.
pub fn degree_condition_lhs(max_degree: usize, r: usize, s: usize, l: usize) -> f64 {
    let (d, r, s, l) = (max_degree as f64, r as f64, s as f64, l as f64);
    ((r + 1.0) * d.ln() + (r - 1.0) * r.ln() + 1.0) * ((l + s) / s).powf(r - 1.0)
}

/// The degree condition `lhs <= δ` under which lists of size `l + s + r - 2`
/// are enough for an r-dynamic coloring when `l = ch(G)`.
pub fn theorem1_hypothesis(max_degree: usize, min_degree: usize, r: usize, s: usize, l: usize) -> bool {
    r >= 2
        && s + 1 >= r
        && s > 0
        && l > 0
        && max_degree > 0
        && degree_condition_lhs(max_degree, r, s, l) <= min_degree as f64
}

/// Analytic bounds on the bad-event probabilities, for comparison with
/// observed frequencies. Never used for control flow.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EventBounds {
    /// `1 - C(l+s-1, l) / C(l+s+r-2, l)`: chance a fixed `(r-1)`-set meets one sublist, at most.
    pub hit_one_list: f64,
    /// `hit_one_list^δ`.
    pub pr_b_binomial: f64,
    /// `(1 - (s/(l+s))^(r-1))^δ`.
    pub pr_b: f64,
    /// `(l+s+r-2)^(r-1) · exp(-δ (s/(l+s))^(r-1))`.
    pub pr_a: f64,
    /// `e · Δ² · pr_a`; the local lemma needs this at most 1.
    pub lll_product: f64,
}

pub fn event_bounds(max_degree: usize, min_degree: usize, r: usize, s: usize, l: usize) -> EventBounds {
    let (lf, sf, rf, delta) = (l as f64, s as f64, r as f64, min_degree as f64);
    let a = l + s - 1;
    let b = l + s + r - 2;
    let ratio: f64 = (0..l).map(|i| (a - i) as f64 / (b - i) as f64).product();
    let hit_one_list = 1.0 - ratio;
    let q = (sf / (lf + sf)).powf(rf - 1.0);
    let pr_a = (b as f64).powf(rf - 1.0) * (-delta * q).exp();
    EventBounds {
        hit_one_list,
        pr_b_binomial: hit_one_list.powf(delta),
        pr_b: (1.0 - q).powf(delta),
        pr_a,
        lll_product: std::f64::consts::E * (max_degree as f64).powi(2) * pr_a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};

    fn lists(raw: &[&[Color]]) -> ListAssignment {
        ListAssignment::new(raw.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    fn star(k: usize) -> Graph {
        Graph::new(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn full_size_sublists_are_the_lists() {
        let base = lists(&[&[1, 2, 3], &[4, 5, 6]]);
        let st = sample_sublists(base.clone(), 3, 9).unwrap();
        assert_eq!(st.sublists(), &base);
        assert_eq!(st.draws(), 2);
    }

    #[test]
    fn sampling_is_reproducible_and_contained() {
        let base = ListAssignment::new((0..20).map(|v| (v..v + 7).collect()).collect()).unwrap();
        let a = sample_sublists(base.clone(), 4, 5).unwrap();
        let b = sample_sublists(base.clone(), 4, 5).unwrap();
        assert_eq!(a.sublists(), b.sublists());
        assert!(a.sublists().is_subassignment_of(&base));
        assert_eq!(a.sublists().uniform_size(), Some(4));
        assert!(matches!(sample_sublists(base, 8, 0), Err(LllError::ListTooSmall { vertex: 0, size: 7, l: 8 })));
    }

    #[test]
    fn singleton_sublists_are_uniform() {
        let base = lists(&[&[1, 2]]);
        let ones = (0..10_000u64)
            .filter(|&seed| sample_sublists(base.clone(), 1, seed).unwrap().sublists().list(0) == [1])
            .count();
        let freq = ones as f64 / 10_000.0;
        assert!((freq - 0.5).abs() <= 0.02, "frequency {freq}");
    }

    #[test]
    fn color_hypergraph_of_neighborhood() {
        let g = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        let l = lists(&[&[9], &[1, 2], &[2, 3]]);
        let h = neighborhood_color_hypergraph(&g, &l, 0).unwrap();
        assert_eq!(h.edge_colors(0), vec![1, 2]);
        assert_eq!(h.edge_colors(1), vec![2, 3]);
        let same = lists(&[&[9], &[1, 2], &[1, 2]]);
        let h = neighborhood_color_hypergraph(&g, &same, 0).unwrap();
        assert_eq!(h.hypergraph.edge(0), h.hypergraph.edge(1));
        let h = neighborhood_color_hypergraph(&g, &l, 1).unwrap();
        assert_eq!(h.hypergraph.edge_count(), 1);
        let lonely = Graph::new(2, []).unwrap();
        assert_eq!(neighborhood_color_hypergraph(&lonely, &lists(&[&[1], &[1]]), 0), Err(LllError::Isolated(0)));
    }

    #[test]
    fn bad_event_examples() {
        let check = |k: usize, subs: &[&[Color]], r: usize| {
            let mut raw: Vec<&[Color]> = vec![&[100, 101]];
            raw.extend_from_slice(subs);
            let sub = lists(&raw);
            let st = SublistState::from_parts(sub.clone(), sub, 0).unwrap();
            bad_event_holds(&star(k), &st, 0, r).unwrap()
        };
        assert!(check(2, &[&[1, 2], &[2, 3]], 2));
        assert!(!check(2, &[&[1, 2], &[3, 4]], 2));
        assert!(check(3, &[&[1, 2], &[3, 4], &[1, 3]], 3));
        let st = SublistState::from_parts(ListAssignment::uniform(3, 2), ListAssignment::uniform(3, 2), 0).unwrap();
        assert!(matches!(bad_event_holds(&star(2), &st, 1, 2), Err(LllError::LowDegree { .. })));
        assert!(matches!(bad_event_holds(&star(2), &st, 0, 1), Err(LllError::InvalidParams(_))));
    }

    #[test]
    fn resampling_trivial_cases() {
        // Disjoint base lists: no color can meet two neighbors' sublists.
        let c6 = generate(GraphKind::Cycle { n: 6 }, 0).unwrap();
        let base = ListAssignment::new((0..6).map(|v| (10 * v..10 * v + 4).collect()).collect()).unwrap();
        let st = sample_sublists(base, 2, 3).unwrap();
        let before = st.sublists().clone();
        let (st, log) = resample_until_clear(&c6, st, 2, 100).unwrap();
        assert_eq!(log.iterations, 0);
        assert_eq!(log.status, ResampleStatus::Clear);
        assert_eq!(log.violations_per_sweep, vec![Vec::<usize>::new()]);
        assert_eq!(st.sublists(), &before);
    }

    #[test]
    fn cap_is_reported_not_raised() {
        // Any three 3-subsets of a 4-set share a color, so K4 never clears.
        let k4 = generate(GraphKind::Complete { n: 4 }, 0).unwrap();
        let st = sample_sublists(ListAssignment::uniform(4, 4), 3, 1).unwrap();
        let (st, log) = resample_until_clear(&k4, st, 2, 7).unwrap();
        assert_eq!(log.status, ResampleStatus::CapReached);
        assert_eq!(log.iterations, 7);
        assert_eq!(log.violations_per_sweep.len(), 8);
        assert!(st.sublists().is_subassignment_of(st.base()));
    }

    #[test]
    fn pipeline_on_cliques() {
        let k5 = generate(GraphKind::Complete { n: 5 }, 0).unwrap();
        let all = ListAssignment::uniform(5, 6);
        for seed in 0..5 {
            let rep = theorem1_pipeline(&k5, &all, 5, 2, seed, Some(200)).unwrap();
            if let Some(c) = rep.coloring() {
                assert!(is_r_dynamic(&k5, c, 2));
            }
        }
        let k4 = generate(GraphKind::Complete { n: 4 }, 0).unwrap();
        let rep = theorem1_pipeline(&k4, &ListAssignment::uniform(4, 4), 3, 2, 0, Some(50)).unwrap();
        assert!(rep.coloring().is_none());
    }

    #[test]
    fn clear_but_uncolorable_sublists() {
        // K_{3,3} with the classic {12, 13, 23} lists on both sides: no color is
        // shared by all three neighbors, yet no proper coloring exists.
        let k33 = generate(GraphKind::CompleteBipartite { a: 3, b: 3 }, 0).unwrap();
        let sub = lists(&[&[1, 2], &[1, 3], &[2, 3], &[1, 2], &[1, 3], &[2, 3]]);
        let base = ListAssignment::new(sub.lists().iter().map(|l| [l.clone(), vec![7]].concat()).collect()).unwrap();
        let st = SublistState::from_parts(base, sub, 0).unwrap();
        let (st, log) = resample_until_clear(&k33, st, 2, 10).unwrap();
        assert_eq!(log.status, ResampleStatus::Clear);
        assert_eq!(color_from_sublists(&k33, &st, 2).unwrap(), None);
    }

    #[test]
    fn pipeline_rejects_bad_parameters() {
        let c6 = generate(GraphKind::Cycle { n: 6 }, 0).unwrap();
        let lists6 = ListAssignment::uniform(6, 4);
        assert!(matches!(theorem1_pipeline(&c6, &lists6, 2, 1, 0, None), Err(LllError::InvalidParams(_))));
        // size 4 = l + s + r - 2 with l = 4, r = 2 gives s = 0 < r - 1
        assert!(matches!(theorem1_pipeline(&c6, &lists6, 4, 2, 0, None), Err(LllError::InvalidParams(_))));
        assert!(matches!(theorem1_pipeline(&c6, &lists6, 1, 3, 0, None), Err(LllError::LowDegree { .. })));
        let ragged =
            ListAssignment::new(vec![vec![1, 2, 3, 4]; 5].into_iter().chain([vec![1, 2, 3]]).collect()).unwrap();
        assert!(matches!(theorem1_pipeline(&c6, &ragged, 2, 2, 0, None), Err(LllError::InvalidParams(_))));
        let ok = theorem1_pipeline(&c6, &lists6, 2, 2, 0, None).unwrap();
        assert_eq!(ok.s, 2);
    }

    #[test]
    fn pipeline_is_deterministic() {
        let g = generate(GraphKind::RandomRegular { n: 16, d: 4 }, 3).unwrap();
        let lists = ListAssignment::uniform(16, 6);
        let a = theorem1_pipeline(&g, &lists, 3, 2, 77, None).unwrap();
        let b = theorem1_pipeline(&g, &lists, 3, 2, 77, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hypothesis_values() {
        let lhs = degree_condition_lhs(24, 2, 3, 3);
        let oracle = (3.0 * 24f64.ln() + 2f64.ln() + 1.0) * 2.0;
        assert!((lhs - oracle).abs() < 1e-12);
        assert!((lhs - 22.454_617_343_207_566).abs() < 1e-9);
        assert!(theorem1_hypothesis(24, 24, 2, 3, 3));
        assert!((degree_condition_lhs(10, 2, 3, 3) - 17.201_804_919_084_168).abs() < 1e-9);
        assert!(!theorem1_hypothesis(10, 10, 2, 3, 3));
        // Large s: the factor tends to 1.
        let limit = 3.0 * 24f64.ln() + 2f64.ln() + 1.0;
        assert!((degree_condition_lhs(24, 2, 1_000_000, 3) - limit).abs() < 1e-4);
        assert!(!theorem1_hypothesis(1000, 1000, 3, 1, 3));
    }

    #[test]
    fn event_bounds_are_ordered() {
        let b = event_bounds(8, 8, 2, 3, 4);
        // r = 2: a fixed color lies in a random 4-of-7 sublist with probability 4/7.
        assert!((b.hit_one_list - 4.0 / 7.0).abs() < 1e-12);
        assert!(b.pr_b_binomial <= b.pr_b + 1e-15);
        assert!(b.pr_b < (-8.0f64 * 3.0 / 7.0).exp());
        for (r, s, l) in [(3, 2, 4), (3, 5, 2), (4, 3, 6)] {
            let b = event_bounds(20, 15, r, s, l);
            assert!(b.pr_b_binomial <= b.pr_b + 1e-12, "{r} {s} {l}");
        }
    }
}
