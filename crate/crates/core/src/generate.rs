//! Seeded graph generators.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

const MAX_RESTARTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphKind {
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// Erdős–Rényi `G(n, p)`.
    Gnp {
        n: usize,
        p: f64,
    },
    RandomRegular {
        n: usize,
        d: usize,
    },
    /// `d`-regular bipartite graph with `half` vertices on each side.
    RandomBipartiteRegular {
        half: usize,
        d: usize,
    },
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generates a graph of the given kind. Deterministic kinds ignore `seed`.
pub fn generate(kind: GraphKind, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = rng_from_seed(seed);
    match kind {
        GraphKind::Cycle { n } => {
            if n < 3 {
                return Err(GraphError::InfeasibleParams(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GraphKind::Complete { n } => Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        GraphKind::CompleteBipartite { a, b } => {
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        GraphKind::Gnp { n, p } => gnp(n, p, &mut rng),
        GraphKind::RandomRegular { n, d } => random_regular(n, d, &mut rng),
        GraphKind::RandomBipartiteRegular { half, d } => random_bipartite_regular(half, d, &mut rng),
    }
}

pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InfeasibleParams(format!("p = {p} is not a probability")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Pairing model: `n·d` half-edges matched at random. Loops and repeated pairs
/// are rejected as they are drawn; a dead end restarts the whole pairing.
pub fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Result<Graph, GraphError> {
    if (n * d) % 2 == 1 {
        return Err(GraphError::InfeasibleParams(format!("n*d = {} is odd", n * d)));
    }
    if d > 0 && d >= n {
        return Err(GraphError::InfeasibleParams(format!("degree {d} needs more than {n} vertices")));
    }
    for _ in 0..MAX_RESTARTS {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        if let Some(edges) = pair_points(&mut points, rng) {
            return Graph::new(n, edges);
        }
    }
    Err(GraphError::InfeasibleParams(format!("no simple {d}-regular pairing found on {n} vertices")))
}

fn pair_points<R: Rng>(points: &mut Vec<usize>, rng: &mut R) -> Option<Vec<(usize, usize)>> {
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    while !points.is_empty() {
        let ok = |i: usize, j: usize, seen: &HashSet<(usize, usize)>| {
            let (u, v) = (points[i], points[j]);
            u != v && !seen.contains(&(u.min(v), u.max(v)))
        };
        let mut pick = None;
        for _ in 0..64 {
            let i = rng.random_range(0..points.len());
            let j = rng.random_range(0..points.len());
            if i != j && ok(i, j, &seen) {
                pick = Some((i, j));
                break;
            }
        }
        if pick.is_none() {
            // Random probing failed; take any admissible pair or give up.
            let len = points.len();
            pick = (0..len).flat_map(|i| (i + 1..len).map(move |j| (i, j))).find(|&(i, j)| ok(i, j, &seen));
        }
        let (i, j) = pick?;
        let (u, v) = (points[i], points[j]);
        seen.insert((u.min(v), u.max(v)));
        edges.push((u, v));
        points.swap_remove(i.max(j));
        points.swap_remove(i.min(j));
    }
    Some(edges)
}

fn random_bipartite_regular<R: Rng>(half: usize, d: usize, rng: &mut R) -> Result<Graph, GraphError> {
    if d > half {
        return Err(GraphError::InfeasibleParams(format!("degree {d} exceeds side size {half}")));
    }
    'restart: for _ in 0..MAX_RESTARTS {
        let mut right: Vec<usize> = (0..half).flat_map(|v| std::iter::repeat_n(half + v, d)).collect();
        right.shuffle(rng);
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(half * d);
        for u in (0..half).flat_map(|v| std::iter::repeat_n(v, d)) {
            let candidates: Vec<usize> = (0..right.len()).filter(|&j| !seen.contains(&(u, right[j]))).collect();
            let Some(&j) = candidates.get(rng.random_range(0..candidates.len().max(1))) else {
                continue 'restart;
            };
            let v = right.swap_remove(j);
            seen.insert((u, v));
            edges.push((u, v));
        }
        return Graph::new(2 * half, edges);
    }
    Err(GraphError::InfeasibleParams(format!("no simple bipartite {d}-regular pairing on {half}+{half}")))
}
