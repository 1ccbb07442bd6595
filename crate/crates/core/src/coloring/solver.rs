use super::{Color, Coloring, ColoringError, Limits, ListAssignment, Mode};
use crate::graph::{Graph, Hypergraph};

const UNSET: Color = Color::MAX;

/// A vertex set that must show at least `need` distinct colors.
struct Group {
    members: Vec<usize>,
    need: usize,
}

/// Constraint system shared by all exact solvers: "conflict" pairs must get
/// different colors, and each group must be colorful enough.
pub(super) struct Constraints {
    conflicts: Vec<Vec<usize>>,
    groups: Vec<Group>,
    member_of: Vec<Vec<usize>>,
}

impl Constraints {
    fn new(conflicts: Vec<Vec<usize>>, groups: Vec<Group>) -> Self {
        let mut member_of = vec![Vec::new(); conflicts.len()];
        for (gi, group) in groups.iter().enumerate() {
            for &v in &group.members {
                member_of[v].push(gi);
            }
        }
        Constraints { conflicts, groups, member_of }
    }

    pub(super) fn for_graph(g: &Graph, mode: Mode) -> Self {
        let conflicts = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        let groups = match mode {
            Mode::Proper => Vec::new(),
            Mode::Dynamic(r) => (0..g.n())
                .map(|v| Group { members: g.neighbors(v).to_vec(), need: r.min(g.degree(v)) })
                // need <= 1 is implied by totality
                .filter(|grp| grp.need > 1)
                .collect(),
        };
        Constraints::new(conflicts, groups)
    }

    pub(super) fn for_strong(h: &Hypergraph, r: usize) -> Self {
        let groups = h
            .edges()
            .iter()
            .map(|e| Group { members: e.clone(), need: r.min(e.len()) })
            .filter(|grp| grp.need > 1)
            .collect();
        Constraints::new(vec![Vec::new(); h.n()], groups)
    }

    fn n(&self) -> usize {
        self.conflicts.len()
    }

    /// Fail-first order: most constrained vertex first, ties by id.
    fn order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.conflicts[v].len() + self.member_of[v].len()));
        order
    }
}

enum Palette<'a> {
    Lists(&'a ListAssignment),
    /// Colors `1..=k` on every vertex; interchangeable, so a fresh color is
    /// only ever tried once.
    Symmetric(Color),
}

struct Search<'a> {
    cons: &'a Constraints,
    palette: Palette<'a>,
    order: Vec<usize>,
    colors: Vec<Color>,
    scratch: Vec<Color>,
}

impl<'a> Search<'a> {
    fn new(cons: &'a Constraints, palette: Palette<'a>) -> Self {
        Search { order: cons.order(), colors: vec![UNSET; cons.n()], cons, palette, scratch: Vec::new() }
    }

    fn run(mut self) -> Option<Coloring> {
        self.extend(0, 0).then_some(self.colors)
    }

    fn extend(&mut self, depth: usize, max_used: Color) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let candidates: Vec<Color> = match &self.palette {
            Palette::Lists(lists) => lists.list(v).to_vec(),
            Palette::Symmetric(k) => (1..=(*k).min(max_used + 1)).collect(),
        };
        for c in candidates {
            if self.cons.conflicts[v].iter().any(|&w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            if self.groups_viable(v) && self.extend(depth + 1, max_used.max(c)) {
                return true;
            }
        }
        self.colors[v] = UNSET;
        false
    }

    /// Every group through `v` can still reach its quota: distinct colors so
    /// far plus uncolored members must cover `need`.
    fn groups_viable(&mut self, v: usize) -> bool {
        for &gi in &self.cons.member_of[v] {
            let group = &self.cons.groups[gi];
            self.scratch.clear();
            let mut open = 0;
            for &w in &group.members {
                match self.colors[w] {
                    UNSET => open += 1,
                    c => self.scratch.push(c),
                }
            }
            self.scratch.sort_unstable();
            self.scratch.dedup();
            if self.scratch.len() + open < group.need {
                return false;
            }
        }
        true
    }
}

/// Exhaustive backtracking for a coloring from `lists` satisfying `mode`.
pub fn solve_list_coloring(g: &Graph, lists: &ListAssignment, mode: Mode) -> Result<Option<Coloring>, ColoringError> {
    lists.check_for(g.n())?;
    if mode == Mode::Dynamic(0) {
        return Err(ColoringError::ZeroR);
    }
    let cons = Constraints::for_graph(g, mode);
    Ok(Search::new(&cons, Palette::Lists(lists)).run())
}

/// Exhaustive backtracking for an r-strong coloring of `h` from `lists`.
pub fn solve_strong_list_coloring(
    h: &Hypergraph,
    lists: &ListAssignment,
    r: usize,
) -> Result<Option<Coloring>, ColoringError> {
    lists.check_for(h.n())?;
    let cons = Constraints::for_strong(h, r);
    Ok(Search::new(&cons, Palette::Lists(lists)).run())
}

pub(super) fn solve_with(cons: &Constraints, lists: &ListAssignment) -> Option<Coloring> {
    Search::new(cons, Palette::Lists(lists)).run()
}

fn min_colors(cons: &Constraints) -> (usize, Coloring) {
    if cons.n() == 0 {
        return (0, Vec::new());
    }
    // All-distinct colors satisfy every constraint, so k = n always succeeds.
    for k in 1..=cons.n() {
        if let Some(c) = Search::new(cons, Palette::Symmetric(k as Color)).run() {
            return (k, c);
        }
    }
    unreachable!("n distinct colors always satisfy the constraints")
}

fn check_cap(n: usize, limits: &Limits) -> Result<(), ColoringError> {
    if n > limits.max_chi_vertices {
        return Err(ColoringError::CapExceeded { what: "vertices", value: n, cap: limits.max_chi_vertices });
    }
    Ok(())
}

/// Smallest `k` admitting a coloring from `1..=k` in the given mode, with a witness.
pub fn chi_exact_with_witness(g: &Graph, mode: Mode, limits: &Limits) -> Result<(usize, Coloring), ColoringError> {
    check_cap(g.n(), limits)?;
    if mode == Mode::Dynamic(0) {
        return Err(ColoringError::ZeroR);
    }
    Ok(min_colors(&Constraints::for_graph(g, mode)))
}

pub fn chi_exact(g: &Graph, mode: Mode, limits: &Limits) -> Result<usize, ColoringError> {
    chi_exact_with_witness(g, mode, limits).map(|(k, _)| k)
}

/// Smallest `k` admitting an r-strong coloring of `h` from `1..=k`, with a witness.
pub fn hyper_chi_strong_with_witness(
    h: &Hypergraph,
    r: usize,
    limits: &Limits,
) -> Result<(usize, Coloring), ColoringError> {
    check_cap(h.n(), limits)?;
    Ok(min_colors(&Constraints::for_strong(h, r)))
}

pub fn hyper_chi_strong(h: &Hypergraph, r: usize, limits: &Limits) -> Result<usize, ColoringError> {
    hyper_chi_strong_with_witness(h, r, limits).map(|(k, _)| k)
}
