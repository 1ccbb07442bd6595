//! Brute-force choosability.
//!
//! List assignments with `|L_v| = k` are enumerated up to renaming of colors:
//! vertices are visited in id order and every color that has not appeared
//! yet is given the next unused label. A list is therefore some subset of the
//! labels seen so far topped up with fresh labels, so no assignment uses more
//! than `k·n` colors.

use itertools::Itertools;

use super::solver::{solve_with, Constraints};
use super::{Color, ColoringError, Limits, ListAssignment, Mode};
use crate::graph::{Graph, Hypergraph};

fn check_caps(n: usize, k: usize, limits: &Limits) -> Result<(), ColoringError> {
    if n > limits.max_choosability_vertices {
        return Err(ColoringError::CapExceeded { what: "vertices", value: n, cap: limits.max_choosability_vertices });
    }
    if k > limits.max_choosability_k {
        return Err(ColoringError::CapExceeded { what: "k", value: k, cap: limits.max_choosability_k });
    }
    Ok(())
}

/// Depth-first walk over canonical assignments. Returns the first one on which
/// `is_bad` holds.
fn search_assignments(n: usize, k: usize, is_bad: &mut dyn FnMut(&ListAssignment) -> bool) -> Option<ListAssignment> {
    fn rec(
        v: usize,
        n: usize,
        k: usize,
        used: Color,
        lists: &mut Vec<Vec<Color>>,
        is_bad: &mut dyn FnMut(&ListAssignment) -> bool,
    ) -> Option<ListAssignment> {
        if v == n {
            let assignment = ListAssignment::new(lists.clone()).expect("lists have size k >= 1");
            return is_bad(&assignment).then_some(assignment);
        }
        for old in 0..=k.min(used as usize) {
            let fresh = (k - old) as Color;
            for chosen in (1..=used).combinations(old) {
                let mut list = chosen;
                list.extend(used + 1..=used + fresh);
                lists.push(list);
                let found = rec(v + 1, n, k, used + fresh, lists, is_bad);
                lists.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
    rec(0, n, k, 0, &mut Vec::with_capacity(n), is_bad)
}

/// A list assignment with all lists of size `k` that admits no coloring in
/// `mode`, if one exists.
pub fn find_bad_list_assignment(
    g: &Graph,
    k: usize,
    mode: Mode,
    limits: &Limits,
) -> Result<Option<ListAssignment>, ColoringError> {
    check_caps(g.n(), k, limits)?;
    if mode == Mode::Dynamic(0) {
        return Err(ColoringError::ZeroR);
    }
    if k == 0 && g.n() > 0 {
        return Err(ColoringError::EmptyList(0));
    }
    let cons = Constraints::for_graph(g, mode);
    Ok(search_assignments(g.n(), k, &mut |lists| solve_with(&cons, lists).is_none()))
}

/// True iff every assignment of `k`-lists admits a coloring in `mode`.
pub fn is_k_choosable(g: &Graph, k: usize, mode: Mode, limits: &Limits) -> Result<bool, ColoringError> {
    if k == 0 {
        check_caps(g.n(), k, limits)?;
        return Ok(g.n() == 0);
    }
    find_bad_list_assignment(g, k, mode, limits).map(|bad| bad.is_none())
}

pub fn find_bad_strong_list_assignment(
    h: &Hypergraph,
    k: usize,
    r: usize,
    limits: &Limits,
) -> Result<Option<ListAssignment>, ColoringError> {
    check_caps(h.n(), k, limits)?;
    if k == 0 && h.n() > 0 {
        return Err(ColoringError::EmptyList(0));
    }
    let cons = Constraints::for_strong(h, r);
    Ok(search_assignments(h.n(), k, &mut |lists| solve_with(&cons, lists).is_none()))
}

/// True iff every assignment of `k`-lists on `V(H)` admits an r-strong coloring.
pub fn hyper_is_k_strong_choosable(h: &Hypergraph, k: usize, r: usize, limits: &Limits) -> Result<bool, ColoringError> {
    if k == 0 {
        check_caps(h.n(), k, limits)?;
        return Ok(h.n() == 0);
    }
    find_bad_strong_list_assignment(h, k, r, limits).map(|bad| bad.is_none())
}
