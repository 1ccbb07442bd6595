//! Coloring predicates and exact solvers.
//!
//! Colors are plain `u32`s. A [`Coloring`] is indexed by vertex; a
//! [`ListAssignment`] gives each vertex a nonempty set of admissible colors.

mod choosability;
mod solver;

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Hypergraph};

pub use choosability::{
    find_bad_list_assignment, find_bad_strong_list_assignment, hyper_is_k_strong_choosable, is_k_choosable,
};
pub use solver::{
    chi_exact, chi_exact_with_witness, hyper_chi_strong, hyper_chi_strong_with_witness, solve_list_coloring,
    solve_strong_list_coloring,
};

pub type Color = u32;
pub type Coloring = Vec<Color>;

/// Which predicate a coloring must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "r", rename_all = "snake_case")]
pub enum Mode {
    Proper,
    /// Proper, and every vertex sees at least `min(r, d(v))` colors on its neighborhood.
    Dynamic(usize),
}

/// Size caps for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_chi_vertices: usize,
    pub max_choosability_vertices: usize,
    pub max_choosability_k: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_chi_vertices: 12, max_choosability_vertices: 8, max_choosability_k: 4 }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("instance too large for exhaustive search: {what} = {value} exceeds cap {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("list assignment covers {lists} vertices but the graph has {n}")]
    SizeMismatch { lists: usize, n: usize },
    #[error("vertex {0} has an empty list")]
    EmptyList(usize),
    #[error("r must be at least 1")]
    ZeroR,
}

/// Per-vertex color lists, each stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self, ColoringError> {
        let mut lists = lists;
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(ColoringError::EmptyList(v));
            }
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex gets `1..=k`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment { lists: vec![(1..=k as Color).collect(); n] }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(k)` when all lists have size `k`.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.lists.first()?.len();
        self.lists.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// True when every `c[v]` lies in `L_v`.
    pub fn admits(&self, c: &[Color]) -> bool {
        c.len() == self.lists.len() && c.iter().enumerate().all(|(v, &col)| self.contains(v, col))
    }

    pub fn is_subassignment_of(&self, other: &ListAssignment) -> bool {
        self.len() == other.len() && self.lists.iter().enumerate().all(|(v, l)| l.iter().all(|&c| other.contains(v, c)))
    }

    pub(crate) fn set_list(&mut self, v: usize, list: Vec<Color>) {
        debug_assert!(!list.is_empty() && list.windows(2).all(|w| w[0] < w[1]));
        self.lists[v] = list;
    }

    pub(crate) fn check_for(&self, n: usize) -> Result<(), ColoringError> {
        if self.lists.len() != n {
            return Err(ColoringError::SizeMismatch { lists: self.lists.len(), n });
        }
        Ok(())
    }
}

// JSON form: {"0": [1, 2], "1": [2, 3], ...} keyed by 0-based vertex id,
// emitted in numeric vertex order.
impl Serialize for ListAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.lists.len()))?;
        for (v, list) in self.lists.iter().enumerate() {
            map.serialize_entry(&v.to_string(), list)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ListAssignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ListVisitor;

        impl<'de> Visitor<'de> for ListVisitor {
            type Value = ListAssignment;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping vertex ids to color arrays")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut entries = BTreeMap::new();
                while let Some((key, list)) = access.next_entry::<String, Vec<Color>>()? {
                    let v: usize = key.parse().map_err(|_| de::Error::custom(format!("bad vertex id `{key}`")))?;
                    if entries.insert(v, list).is_some() {
                        return Err(de::Error::custom(format!("duplicate vertex id {v}")));
                    }
                }
                if let Some((_, &v)) = entries.keys().enumerate().find(|&(i, &v)| i != v) {
                    return Err(de::Error::custom(format!("vertex ids must be 0..n without gaps (saw {v})")));
                }
                ListAssignment::new(entries.into_values().collect()).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_map(ListVisitor)
    }
}

fn distinct_count(colors: impl Iterator<Item = Color>) -> usize {
    let mut seen: Vec<Color> = colors.collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Number of distinct colors on `N(v)`.
pub fn neighborhood_color_count(g: &Graph, c: &[Color], v: usize) -> usize {
    distinct_count(g.neighbors(v).iter().map(|&w| c[w]))
}

pub fn is_proper(g: &Graph, c: &[Color]) -> bool {
    c.len() == g.n() && g.edges().all(|(u, v)| c[u] != c[v])
}

pub fn is_r_dynamic(g: &Graph, c: &[Color], r: usize) -> bool {
    is_proper(g, c) && (0..g.n()).all(|v| neighborhood_color_count(g, c, v) >= r.min(g.degree(v)))
}

pub fn satisfies(g: &Graph, c: &[Color], mode: Mode) -> bool {
    match mode {
        Mode::Proper => is_proper(g, c),
        Mode::Dynamic(r) => is_r_dynamic(g, c, r),
    }
}

/// Every edge `e` carries at least `min(r, |e|)` distinct colors. No properness
/// requirement.
pub fn is_r_strong(h: &Hypergraph, c: &[Color], r: usize) -> bool {
    c.len() == h.n() && h.edges().iter().all(|e| distinct_count(e.iter().map(|&v| c[v])) >= r.min(e.len()))
}
