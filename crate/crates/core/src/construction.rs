//! Incidence-graph construction over an augmented hypergraph.
//!
//! Starting from a `(k - r + 2)`-uniform hypergraph `H`, [`augment`] adds a
//! core `X` of `r - 2` new vertices to every edge, pads the vertex set with
//! isolated vertices, and appends `r` pairwise edge-disjoint partitions of the
//! vertex set into `k`-sets (the "matchings"). In the incidence graph of the
//! result, an r-strong coloring `f` of the hypergraph lifts to an r-dynamic
//! coloring: hypergraph vertices keep `f`, an edge-vertex from matching `i`
//! gets `α_i`, and every other edge-vertex gets `α_r`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    chi_exact, hyper_chi_strong_with_witness, is_r_dynamic, is_r_strong, Color, Coloring, ColoringError, Limits, Mode,
};
use crate::generate::rng_from_seed;
use crate::graph::{GraphError, Hypergraph, IncidenceGraph};

const MATCHING_TRIES: usize = 1000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("need k >= r >= 2, got r = {r}, k = {k}")]
    BadParams { r: usize, k: usize },
    #[error("edge {edge} has {size} vertices, expected k - r + 2 = {expected}")]
    NotUniform { edge: usize, size: usize, expected: usize },
    #[error("could not find {r} edge-disjoint partitions into {k}-sets after {tries} tries")]
    MatchingsUnachievable { r: usize, k: usize, tries: usize },
    #[error("coloring has {got} entries, hypergraph has {expected} vertices")]
    WrongLength { got: usize, expected: usize },
    #[error("coloring is not {0}-strong on the augmented hypergraph")]
    NotStrong(usize),
    #[error("need {r} distinct fresh colors outside the range of f")]
    BadAlphas { r: usize },
    #[error("internal defect: lifted coloring is not {0}-dynamic")]
    LiftDefect(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum EdgeOrigin {
    Base,
    /// Block of matching `i` (0-based).
    Matching(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedHypergraph {
    pub r: usize,
    pub k: usize,
    pub base: Hypergraph,
    /// The `r - 2` vertices added to every base edge.
    pub core: Vec<usize>,
    /// Base edges (each `e ∪ X`) first, then the blocks of each matching.
    pub hypergraph: Hypergraph,
    pub origins: Vec<EdgeOrigin>,
}

impl AugmentedHypergraph {
    pub fn padded_vertices(&self) -> usize {
        self.hypergraph.n()
    }

    pub fn matching(&self, i: usize) -> impl Iterator<Item = &[usize]> + '_ {
        self.origins
            .iter()
            .zip(self.hypergraph.edges())
            .filter(move |(o, _)| **o == EdgeOrigin::Matching(i))
            .map(|(_, e)| e.as_slice())
    }
}

/// Builds the augmented hypergraph. The vertex count is padded up to a
/// multiple of `k`, and to at least `2k` so that distinct partitions exist.
pub fn augment(h: &Hypergraph, r: usize, k: usize, seed: u64) -> Result<AugmentedHypergraph, ConstructionError> {
    if r < 2 || r > k {
        return Err(ConstructionError::BadParams { r, k });
    }
    let expected = k - r + 2;
    if let Some((edge, e)) = h.edges().iter().enumerate().find(|(_, e)| e.len() != expected) {
        return Err(ConstructionError::NotUniform { edge, size: e.len(), expected });
    }
    let n = h.n();
    let core: Vec<usize> = (n..n + r - 2).collect();
    let padded = (n + r - 2).div_ceil(k).max(2) * k;

    let mut edges: Vec<Vec<usize>> = h.edges().iter().map(|e| [e.as_slice(), &core].concat()).collect();
    let mut origins = vec![EdgeOrigin::Base; edges.len()];

    let mut rng = rng_from_seed(seed);
    let mut used: HashSet<Vec<usize>> = HashSet::new();
    let mut perm: Vec<usize> = (0..padded).collect();
    for i in 0..r {
        let blocks = (0..MATCHING_TRIES)
            .find_map(|_| {
                perm.shuffle(&mut rng);
                let mut blocks: Vec<Vec<usize>> = perm
                    .chunks(k)
                    .map(|c| {
                        let mut b = c.to_vec();
                        b.sort_unstable();
                        b
                    })
                    .collect();
                blocks.sort();
                blocks.iter().all(|b| !used.contains(b)).then_some(blocks)
            })
            .ok_or(ConstructionError::MatchingsUnachievable { r, k, tries: MATCHING_TRIES })?;
        for b in blocks {
            used.insert(b.clone());
            edges.push(b);
            origins.push(EdgeOrigin::Matching(i));
        }
    }
    let hypergraph = Hypergraph::new(padded, edges)?;
    Ok(AugmentedHypergraph { r, k, base: h.clone(), core, hypergraph, origins })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedColoring {
    pub incidence: IncidenceGraph,
    pub coloring: Coloring,
}

/// Extends an r-strong coloring `f` of the augmented hypergraph to its
/// incidence graph using the fresh colors `alphas` (`alphas[i]` for matching `i`,
/// `alphas[r-1]` for base edges). The result is checked to be r-dynamic.
pub fn lift_coloring(
    aug: &AugmentedHypergraph,
    f: &[Color],
    alphas: &[Color],
) -> Result<LiftedColoring, ConstructionError> {
    let r = aug.r;
    let h = &aug.hypergraph;
    if f.len() != h.n() {
        return Err(ConstructionError::WrongLength { got: f.len(), expected: h.n() });
    }
    if !is_r_strong(h, f, r) {
        return Err(ConstructionError::NotStrong(r));
    }
    let mut distinct = alphas.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if alphas.len() != r || distinct.len() != r || f.iter().any(|c| distinct.binary_search(c).is_ok()) {
        return Err(ConstructionError::BadAlphas { r });
    }
    let incidence = h.incidence_graph()?;
    let mut coloring = f.to_vec();
    coloring.extend(aug.origins.iter().map(|o| match o {
        EdgeOrigin::Matching(i) => alphas[*i],
        EdgeOrigin::Base => alphas[r - 1],
    }));
    if !is_r_dynamic(&incidence.graph, &coloring, r) {
        return Err(ConstructionError::LiftDefect(r));
    }
    Ok(LiftedColoring { incidence, coloring })
}

/// Exact small-instance check of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub r: usize,
    pub k: usize,
    pub seed: u64,
    pub base_vertices: usize,
    pub base_edges: usize,
    pub padded_vertices: usize,
    pub augmented_edges: usize,
    pub incidence_vertices: usize,
    pub bipartite: bool,
    pub degeneracy: usize,
    pub k_degenerate: bool,
    /// Least number of colors in an r-strong coloring of the augmented hypergraph.
    pub chi_strong: usize,
    /// r-dynamic chromatic number of the incidence graph.
    pub chi_dynamic: usize,
    pub lifted_valid: bool,
    pub lifted_colors_used: usize,
    /// `chi_dynamic >= chi_strong`.
    pub lower_bound_holds: bool,
    /// `chi_dynamic <= chi_strong + r`.
    pub upper_bound_holds: bool,
}

pub fn verify_theorem2_small(
    h: &Hypergraph,
    r: usize,
    k: usize,
    seed: u64,
    limits: &Limits,
) -> Result<ConstructionReport, ConstructionError> {
    let aug = augment(h, r, k, seed)?;
    let (chi_strong, f) = hyper_chi_strong_with_witness(&aug.hypergraph, r, limits)?;
    let alphas: Vec<Color> = (1..=r as Color).map(|i| chi_strong as Color + i).collect();
    let lifted = lift_coloring(&aug, &f, &alphas)?;
    let graph = &lifted.incidence.graph;
    let chi_dynamic = chi_exact(graph, Mode::Dynamic(r), limits)?;
    let mut used = lifted.coloring.clone();
    used.sort_unstable();
    used.dedup();
    let degeneracy = graph.degeneracy();
    Ok(ConstructionReport {
        r,
        k,
        seed,
        base_vertices: h.n(),
        base_edges: h.edge_count(),
        padded_vertices: aug.padded_vertices(),
        augmented_edges: aug.hypergraph.edge_count(),
        incidence_vertices: graph.n(),
        bipartite: graph.is_bipartite(),
        degeneracy,
        k_degenerate: degeneracy <= k,
        chi_strong,
        chi_dynamic,
        lifted_valid: is_r_dynamic(graph, &lifted.coloring, r),
        lifted_colors_used: used.len(),
        lower_bound_holds: chi_dynamic >= chi_strong,
        upper_bound_holds: chi_dynamic <= chi_strong + r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        Hypergraph::new(3, [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn core_size_and_padding() {
        let aug = augment(&triangle(), 2, 2, 1).unwrap();
        assert!(aug.core.is_empty());
        assert_eq!(aug.padded_vertices(), 4);
        assert_eq!(&aug.hypergraph.edges()[..3], triangle().edges());

        let one = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        let aug = augment(&one, 3, 4, 0).unwrap();
        assert_eq!(aug.core, vec![3]);
        assert_eq!(aug.hypergraph.edge(0), &[0, 1, 2, 3]);
        assert_eq!(aug.padded_vertices() % 4, 0);
    }

    #[test]
    fn matchings_partition_and_are_disjoint() {
        for seed in 0..10 {
            let h = Hypergraph::new(5, [vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
            let aug = augment(&h, 3, 4, seed).unwrap();
            let n = aug.padded_vertices();
            let mut all = HashSet::new();
            for i in 0..3 {
                let mut hits = vec![0; n];
                for b in aug.matching(i) {
                    assert_eq!(b.len(), 4);
                    assert!(all.insert(b.to_vec()), "block shared between matchings");
                    for &v in b {
                        hits[v] += 1;
                    }
                }
                assert!(hits.iter().all(|&c| c == 1));
            }
        }
    }

    #[test]
    fn augment_rejects_bad_input() {
        assert_eq!(augment(&triangle(), 3, 2, 0), Err(ConstructionError::BadParams { r: 3, k: 2 }));
        assert_eq!(augment(&triangle(), 1, 2, 0), Err(ConstructionError::BadParams { r: 1, k: 2 }));
        assert_eq!(augment(&triangle(), 2, 3, 0), Err(ConstructionError::NotUniform { edge: 0, size: 2, expected: 3 }));
    }

    #[test]
    fn lift_follows_the_rule() {
        let aug = augment(&triangle(), 2, 2, 4).unwrap();
        let limits = Limits::default();
        let (chi, f) = hyper_chi_strong_with_witness(&aug.hypergraph, 2, &limits).unwrap();
        let alphas = [chi as Color + 1, chi as Color + 2];
        let lifted = lift_coloring(&aug, &f, &alphas).unwrap();
        let inc = &lifted.incidence;
        for a in inc.side_a() {
            assert_eq!(lifted.coloring[a], f[a]);
            // every hypergraph vertex sees all the alphas
            let seen: HashSet<Color> = inc.graph.neighbors(a).iter().map(|&b| lifted.coloring[b]).collect();
            assert!(alphas.iter().all(|x| seen.contains(x)));
        }
        for (i, o) in aug.origins.iter().enumerate() {
            let want = match o {
                EdgeOrigin::Matching(j) => alphas[*j],
                EdgeOrigin::Base => alphas[1],
            };
            assert_eq!(lifted.coloring[inc.edge_vertex(i)], want);
        }
        assert!(is_r_dynamic(&inc.graph, &lifted.coloring, 2));
    }

    #[test]
    fn lift_rejects_bad_inputs() {
        let aug = augment(&triangle(), 2, 2, 4).unwrap();
        let n = aug.padded_vertices();
        assert_eq!(lift_coloring(&aug, &vec![1; n], &[5, 6]), Err(ConstructionError::NotStrong(2)));
        let (_, f) = hyper_chi_strong_with_witness(&aug.hypergraph, 2, &Limits::default()).unwrap();
        assert_eq!(lift_coloring(&aug, &f, &[1, 9]), Err(ConstructionError::BadAlphas { r: 2 }));
        assert_eq!(lift_coloring(&aug, &f, &[9, 9]), Err(ConstructionError::BadAlphas { r: 2 }));
        assert_eq!(
            lift_coloring(&aug, &f[1..], &[8, 9]),
            Err(ConstructionError::WrongLength { got: n - 1, expected: n })
        );
    }

    #[test]
    fn triangle_report() {
        let rep = verify_theorem2_small(&triangle(), 2, 2, 0, &Limits::default()).unwrap();
        assert!(rep.bipartite && rep.k_degenerate && rep.lifted_valid);
        assert!(rep.lower_bound_holds && rep.upper_bound_holds);
        assert_eq!(rep.lifted_colors_used, rep.chi_strong + 2);
        assert_eq!(rep.incidence_vertices, rep.padded_vertices + rep.augmented_edges);
    }
}
