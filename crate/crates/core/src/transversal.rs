//! Small transversals of hypergraphs.
//!
//! [`candidate_family`] builds, for a hypergraph whose edges have at most `k`
//! vertices, a family of at most `k^r` vertex sets of size `r` such that `H`
//! has a transversal of size `r` iff some member of the family is one.
//!
//! The recursion fixes the lowest-index remaining edge `e`. Any transversal
//! meets `e` in some `v`, and what it still has to hit are the edges avoiding
//! `v`; so for each `v ∈ e` we recurse with size `r - 1` on the edges not
//! containing `v` and add `v` back to every returned set.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Hypergraph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TransversalError {
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("transversal size must be at least 1")]
    ZeroSize,
    #[error("cannot form sets of size {r} from {n} vertices")]
    TooFewVertices { n: usize, r: usize },
    #[error("candidate method needs a uniform hypergraph")]
    NonUniform,
}

/// How [`has_small_transversal`] decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Candidates,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateFamily {
    /// Size of every member.
    pub r: usize,
    /// Sorted, deduplicated members, each a sorted vertex set.
    pub sets: Vec<Vec<usize>>,
    /// Index of the edge branched on at the top level.
    pub pivot_edge: usize,
}

impl CandidateFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

pub fn is_transversal(h: &Hypergraph, set: &[usize]) -> bool {
    let mut mask = vec![false; h.n()];
    for &v in set {
        if v < mask.len() {
            mask[v] = true;
        }
    }
    h.edges().iter().all(|e| e.iter().any(|&v| mask[v]))
}

/// Partial hitting sets (size `<= r`) built by the branching recursion over
/// the edges listed in `active`.
fn branch(h: &Hypergraph, active: &[usize], r: usize) -> Vec<Vec<usize>> {
    let Some(&first) = active.first() else {
        // Nothing left to hit.
        return vec![Vec::new()];
    };
    let edge = h.edge(first);
    if r == 1 {
        return edge.iter().map(|&v| vec![v]).collect();
    }
    let mut out = Vec::new();
    for &v in edge {
        let rest: Vec<usize> = active.iter().copied().filter(|&i| !h.edge(i).contains(&v)).collect();
        for mut set in branch(h, &rest, r - 1) {
            set.push(v);
            out.push(set);
        }
    }
    out
}

/// Builds the candidate family for transversals of size `r`.
///
/// Every member has exactly `r` vertices (short hitting sets are padded with
/// the smallest unused vertex ids) and the family has at most `k^r` members,
/// `k` being the largest edge size.
pub fn candidate_family(h: &Hypergraph, r: usize) -> Result<CandidateFamily, TransversalError> {
    if h.edge_count() == 0 {
        return Err(TransversalError::NoEdges);
    }
    if r == 0 {
        return Err(TransversalError::ZeroSize);
    }
    if h.n() < r {
        return Err(TransversalError::TooFewVertices { n: h.n(), r });
    }
    let active: Vec<usize> = (0..h.edge_count()).collect();
    let mut sets: Vec<Vec<usize>> = branch(h, &active, r)
        .into_iter()
        .map(|mut set| {
            let mut pad = 0;
            while set.len() < r {
                if !set.contains(&pad) {
                    set.push(pad);
                }
                pad += 1;
            }
            set.sort_unstable();
            set
        })
        .collect();
    sets.sort();
    sets.dedup();
    Ok(CandidateFamily { r, sets, pivot_edge: 0 })
}

/// Whether `h` has a transversal with at most `r` vertices.
pub fn has_small_transversal(h: &Hypergraph, r: usize, method: Method) -> Result<bool, TransversalError> {
    match method {
        Method::BruteForce => Ok(brute_force_transversal(h, r).is_some()),
        Method::Candidates => {
            if h.edge_count() == 0 {
                return Ok(true);
            }
            if h.uniformity().is_none() {
                return Err(TransversalError::NonUniform);
            }
            // Supersets of transversals are transversals, so with fewer than r
            // vertices the question is about size n.
            let r = r.min(h.n());
            if r == 0 {
                return Ok(false);
            }
            let family = candidate_family(h, r)?;
            Ok(family.sets.iter().any(|s| is_transversal(h, s)))
        }
    }
}

/// Smallest-first search over all vertex subsets of size at most `r`.
pub fn brute_force_transversal(h: &Hypergraph, r: usize) -> Option<Vec<usize>> {
    (0..=r.min(h.n())).find_map(|size| (0..h.n()).combinations(size).find(|s| is_transversal(h, s)))
}
