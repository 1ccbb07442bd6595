//! Greedy r-dynamic list coloring.
//!
//! When `v` is colored, two kinds of colors are forbidden:
//!
//! * colors already on neighbors of `v` (at most `Δ`), and
//! * for each neighbor `u` of `v` whose colored neighbors still show fewer than
//!   `min(r, d(u))` distinct colors, every color on those neighbors (at most
//!   `r - 1` per `u`).
//!
//! That is at most `rΔ` colors, so a list of size `rΔ + 1` always has a free
//! one. The second rule keeps, for every `u`, at least `min(r, c(u))` distinct
//! colors among its `c(u)` colored neighbors, which at the end is the r-dynamic
//! condition.

use thiserror::Error;

use crate::coloring::{is_r_dynamic, Color, Coloring, ListAssignment};
use crate::graph::Graph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GreedyError {
    #[error("vertex {vertex} has {size} colors, r*Δ+1 = {needed} required")]
    ListTooSmall { vertex: usize, size: usize, needed: usize },
    #[error("list assignment covers {lists} vertices but the graph has {n}")]
    SizeMismatch { lists: usize, n: usize },
    #[error("order is not a permutation of the vertices")]
    BadOrder,
    #[error("r must be at least 1")]
    ZeroR,
    #[error("internal defect: no admissible color for vertex {0}")]
    NoFreeColor(usize),
    #[error("internal defect: greedy output failed the r-dynamic check")]
    InvalidOutput,
}

/// Incremental state of the greedy colorer; exposed so that the running
/// invariant can be checked between steps.
pub struct GreedyDynamic<'a> {
    graph: &'a Graph,
    lists: &'a ListAssignment,
    r: usize,
    colors: Vec<Option<Color>>,
}

impl<'a> GreedyDynamic<'a> {
    pub fn new(graph: &'a Graph, lists: &'a ListAssignment, r: usize) -> Result<Self, GreedyError> {
        if r == 0 {
            return Err(GreedyError::ZeroR);
        }
        if lists.len() != graph.n() {
            return Err(GreedyError::SizeMismatch { lists: lists.len(), n: graph.n() });
        }
        let needed = r * graph.max_degree() + 1;
        if let Some(v) = (0..graph.n()).find(|&v| lists.list(v).len() < needed) {
            return Err(GreedyError::ListTooSmall { vertex: v, size: lists.list(v).len(), needed });
        }
        Ok(GreedyDynamic { graph, lists, r, colors: vec![None; graph.n()] })
    }

    fn colored_neighbor_colors(&self, u: usize) -> Vec<Color> {
        let mut seen: Vec<Color> = self.graph.neighbors(u).iter().filter_map(|&w| self.colors[w]).collect();
        seen.sort_unstable();
        seen.dedup();
        seen
    }

    /// Colors `v` with its smallest admissible color.
    pub fn color(&mut self, v: usize) -> Result<Color, GreedyError> {
        let mut forbidden: Vec<Color> = self.graph.neighbors(v).iter().filter_map(|&w| self.colors[w]).collect();
        for &u in self.graph.neighbors(v) {
            let seen = self.colored_neighbor_colors(u);
            if seen.len() < self.r.min(self.graph.degree(u)) {
                forbidden.extend(seen);
            }
        }
        let c = *self.lists.list(v).iter().find(|c| !forbidden.contains(c)).ok_or(GreedyError::NoFreeColor(v))?;
        self.colors[v] = Some(c);
        Ok(c)
    }

    /// For every vertex: distinct colors on colored neighbors is at least
    /// `min(r, number of colored neighbors)`, and no edge is monochromatic.
    pub fn invariant_holds(&self) -> bool {
        (0..self.graph.n()).all(|u| {
            let colored = self.graph.neighbors(u).iter().filter(|&&w| self.colors[w].is_some()).count();
            let proper = match self.colors[u] {
                Some(c) => self.graph.neighbors(u).iter().all(|&w| self.colors[w] != Some(c)),
                None => true,
            };
            proper && self.colored_neighbor_colors(u).len() >= self.r.min(colored)
        })
    }

    pub fn partial(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn finish(self) -> Option<Coloring> {
        self.colors.into_iter().collect()
    }
}

/// Colors the vertices in `order` (ascending ids when `None`).
pub fn greedy_r_dynamic(
    graph: &Graph,
    lists: &ListAssignment,
    r: usize,
    order: Option<&[usize]>,
) -> Result<Coloring, GreedyError> {
    let default_order: Vec<usize>;
    let order = match order {
        Some(o) => o,
        None => {
            default_order = (0..graph.n()).collect();
            &default_order
        }
    };
    let mut seen = vec![false; graph.n()];
    if order.len() != graph.n() || order.iter().any(|&v| v >= graph.n() || std::mem::replace(&mut seen[v], true)) {
        return Err(GreedyError::BadOrder);
    }
    let mut state = GreedyDynamic::new(graph, lists, r)?;
    for &v in order {
        state.color(v)?;
    }
    let coloring = state.finish().expect("every vertex colored");
    if !is_r_dynamic(graph, &coloring, r) {
        return Err(GreedyError::InvalidOutput);
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};
    use rand::seq::index::sample;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn first_fit_on_k4() {
        let k4 = generate(GraphKind::Complete { n: 4 }, 0).unwrap();
        let lists = ListAssignment::uniform(4, 7);
        assert_eq!(greedy_r_dynamic(&k4, &lists, 2, Some(&[0, 1, 2, 3])).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn edgeless_graph_uses_singletons() {
        let g = Graph::empty(4);
        let lists = ListAssignment::new(vec![vec![9], vec![3], vec![3], vec![1]]).unwrap();
        assert_eq!(greedy_r_dynamic(&g, &lists, 3, None).unwrap(), vec![9, 3, 3, 1]);
    }

    #[test]
    fn precondition_violations() {
        let c5 = generate(GraphKind::Cycle { n: 5 }, 0).unwrap();
        assert_eq!(
            greedy_r_dynamic(&c5, &ListAssignment::uniform(5, 4), 2, None),
            Err(GreedyError::ListTooSmall { vertex: 0, size: 4, needed: 5 })
        );
        let lists = ListAssignment::uniform(5, 5);
        assert_eq!(greedy_r_dynamic(&c5, &lists, 2, Some(&[0, 1, 2, 3, 3])), Err(GreedyError::BadOrder));
        assert_eq!(greedy_r_dynamic(&c5, &lists, 2, Some(&[0, 1])), Err(GreedyError::BadOrder));
        assert_eq!(greedy_r_dynamic(&c5, &lists, 0, None), Err(GreedyError::ZeroR));
        assert!(greedy_r_dynamic(&c5, &lists, 2, None).is_ok());
    }

    #[test]
    fn invariant_holds_after_every_step() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..60 {
            let n = rng.random_range(2..25);
            let p = [0.1, 0.3, 0.5][trial % 3];
            let g = generate(GraphKind::Gnp { n, p }, trial as u64).unwrap();
            let r = 2 + trial % 2;
            let size = r * g.max_degree() + 1;
            let lists: Vec<Vec<Color>> =
                (0..n).map(|_| sample(&mut rng, 2 * size, size).into_iter().map(|c| c as Color).collect()).collect();
            let lists = ListAssignment::new(lists).unwrap();
            let mut order: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng);
            let mut state = GreedyDynamic::new(&g, &lists, r).unwrap();
            for &v in &order {
                let c = state.color(v).unwrap();
                assert!(lists.contains(v, c));
                assert!(state.invariant_holds(), "trial {trial} after vertex {v}");
            }
            let c = state.finish().unwrap();
            assert!(is_r_dynamic(&g, &c, r));
            assert_eq!(greedy_r_dynamic(&g, &lists, r, Some(&order)).unwrap(), c);
        }
    }
}
