//! Simple undirected graphs and hypergraphs, plus the two constructions that
//! move between them: the neighborhood hypergraph of a graph and the
//! incidence graph of a hypergraph.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),
    #[error("hypergraph has no vertices")]
    EmptyHypergraph,
}

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and deduplicated; the graph is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either orientation)
    /// are merged; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        DegreeStats {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            degrees,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Hypergraph on `V(G)` whose edge `v` is `N(v)`. Isolated vertices give
    /// empty edges so that edge index and vertex id always coincide.
    pub fn neighborhood_hypergraph(&self) -> Hypergraph {
        Hypergraph { n: self.n(), edges: self.adj.clone() }
    }

    /// Proper 2-coloring by BFS, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n()];
        let mut queue = VecDeque::new();
        for start in 0..self.n() {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Degeneracy: the largest minimum degree met while repeatedly peeling a
    /// minimum-degree vertex.
    pub fn degeneracy(&self) -> usize {
        let n = self.n();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut best = 0;
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| deg[v]).expect("vertex left");
            best = best.max(deg[v]);
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        best
    }

    pub fn is_k_degenerate(&self, k: usize) -> bool {
        self.degeneracy() <= k
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }
}

/// Maximum degree, minimum degree and the full degree sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    pub degrees: Vec<usize>,
}

/// Hypergraph on vertices `0..n` with an ordered edge list.
///
/// Edges are sorted vertex sets. Repeated edges are kept: several vertices of
/// a graph may share a neighborhood, and each one is its own edge. Empty edges
/// are permitted (isolated vertices produce them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if let Some(&w) = e.last() {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `Some(k)` when every edge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Bipartite incidence graph: vertices `0..n` stand for `V(H)` and
    /// `n + i` stands for edge `i`.
    pub fn incidence_graph(&self) -> Result<IncidenceGraph, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyHypergraph);
        }
        let pairs = self.edges.iter().enumerate().flat_map(|(i, e)| e.iter().map(move |&v| (v, self.n + i)));
        let graph = Graph::new(self.n + self.edges.len(), pairs)?;
        Ok(IncidenceGraph { graph, vertex_side: self.n })
    }
}

/// Incidence graph together with its bipartition `A = 0..vertex_side`,
/// `B = vertex_side..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGraph {
    pub graph: Graph,
    pub vertex_side: usize,
}

impl IncidenceGraph {
    pub fn side_a(&self) -> std::ops::Range<usize> {
        0..self.vertex_side
    }

    pub fn side_b(&self) -> std::ops::Range<usize> {
        self.vertex_side..self.graph.n()
    }

    /// Graph vertex standing for hyperedge `i`.
    pub fn edge_vertex(&self, i: usize) -> usize {
        self.vertex_side + i
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn build_path_and_cycle() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degree_stats().degrees, vec![1, 2, 1]);
        let s = c4().degree_stats();
        assert_eq!((s.max_degree, s.min_degree), (2, 2));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn duplicate_edges_merge() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn degree_stats_extremes() {
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s = star.degree_stats();
        assert_eq!((s.max_degree, s.min_degree), (4, 1));
        let s = Graph::empty(3).degree_stats();
        assert_eq!((s.max_degree, s.min_degree), (0, 0));
    }

    #[test]
    fn neighborhood_hypergraph_edges() {
        assert_eq!(c4().neighborhood_hypergraph().edges(), &[vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]]);
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.neighborhood_hypergraph().edges(), &[vec![1, 2], vec![0, 2], vec![0, 1]]);
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.neighborhood_hypergraph().edges(), &[vec![1], vec![0, 2], vec![1]]);
        let lonely = Graph::new(3, [(0, 1)]).unwrap().neighborhood_hypergraph();
        assert_eq!(lonely.edge(2), &[] as &[usize]);
    }

    #[test]
    fn incidence_graph_shapes() {
        let h = Hypergraph::new(2, [vec![0, 1]]).unwrap();
        let inc = h.incidence_graph().unwrap();
        // path a - e - b
        assert_eq!(inc.graph.n(), 3);
        assert_eq!(inc.graph.neighbors(2), &[0, 1]);
        assert_eq!(inc.graph.degree(0), 1);

        let h = Hypergraph::new(3, [vec![0, 1], vec![1, 2]]).unwrap();
        let inc = h.incidence_graph().unwrap();
        assert_eq!(inc.graph.n(), 5);
        assert_eq!(inc.graph.edge_count(), 4);
        assert!(inc.side_b().all(|b| inc.graph.degree(b) == 2));
        assert!(inc.graph.is_bipartite());

        assert_eq!(Hypergraph::new(0, []).unwrap().incidence_graph(), Err(GraphError::EmptyHypergraph));
    }

    #[test]
    fn bipartite_and_degeneracy() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(!c5.is_bipartite());
        assert!(c4().is_bipartite());
        assert_eq!(c5.degeneracy(), 2);
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.degeneracy(), 3);
        assert!(!k4.is_triangle_free());
        assert!(c4().is_triangle_free());
    }

    #[test]
    fn hypergraph_uniformity() {
        let h = Hypergraph::new(4, [vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(h.uniformity(), Some(2));
        let h = Hypergraph::new(4, [vec![0, 1], vec![1, 2, 3]]).unwrap();
        assert_eq!(h.uniformity(), None);
        assert_eq!(h.max_edge_size(), 3);
        assert!(Hypergraph::new(2, [vec![0, 5]]).is_err());
    }
}
