//! Numeric evaluation of the r-dynamic choosability bounds.
//!
//! Each entry reports whether its hypothesis holds for the given degree data
//! and what it then bounds `ch_r(G)` by. Results that depend on absolute
//! constants nobody has pinned down (`C`, `K'`, `c₂`) are reported symbolically.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lll::degree_condition_lhs;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum BoundsError {
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("minimum degree {min} exceeds maximum degree {max}")]
    DegreeOrder { min: usize, max: usize },
    #[error("r must be at least 2")]
    SmallR,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsInput {
    /// Maximum degree Δ.
    pub max_degree: usize,
    /// Minimum degree δ.
    pub min_degree: usize,
    pub r: usize,
    /// Choice number `ch(G)`, or a known upper bound for it.
    pub l: usize,
    /// Slack parameter for the general degree condition.
    pub s: Option<usize>,
    /// Vertex count and edge probability for `G(n, p)`.
    pub n: Option<usize>,
    pub p: Option<f64>,
    /// Neighborhood sparsity: each `G[N(v)]` has at most `Δ²/f` edges.
    pub f: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub id: &'static str,
    pub formula: &'static str,
    /// `None` when the hypothesis cannot be decided from the inputs.
    pub applicable: Option<bool>,
    pub hypothesis_lhs: Option<f64>,
    pub hypothesis_rhs: Option<f64>,
    /// Upper bound on `ch_r(G)` when the hypothesis holds.
    pub bound: Option<f64>,
    pub symbolic_bound: Option<String>,
    pub derived: BTreeMap<&'static str, f64>,
    pub assumptions: Vec<&'static str>,
}

impl BoundEntry {
    fn new(id: &'static str, formula: &'static str) -> Self {
        BoundEntry {
            id,
            formula,
            applicable: None,
            hypothesis_lhs: None,
            hypothesis_rhs: None,
            bound: None,
            symbolic_bound: None,
            derived: BTreeMap::new(),
            assumptions: Vec::new(),
        }
    }

    /// Sets lhs/rhs and `applicable = lhs <= rhs`.
    fn condition(mut self, lhs: f64, rhs: f64) -> Self {
        self.hypothesis_lhs = Some(lhs);
        self.hypothesis_rhs = Some(rhs);
        self.applicable = Some(lhs <= rhs);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub inputs: BoundsInput,
    pub entries: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn entry(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// `6^(2r) · r^(3r) · k²`, the size `ch(G)` must reach before the `(1 + o(1))`
/// bound kicks in with the explicit slack below.
pub fn large_choice_threshold(r: usize, k: f64) -> f64 {
    let r = r as f64;
    6f64.powf(2.0 * r) * r.powf(3.0 * r) * k * k
}

/// `⌈(3 k r l^(r-2) ln l)^(1/(r-1))⌉`.
pub fn large_choice_slack(r: usize, k: f64, l: usize) -> f64 {
    let (rf, lf) = (r as f64, l as f64);
    (3.0 * k * rf * lf.powf(rf - 2.0) * lf.ln()).powf(1.0 / (rf - 1.0)).ceil()
}

pub fn bounds_report(inputs: &BoundsInput) -> Result<BoundsReport, BoundsError> {
    let BoundsInput { max_degree, min_degree, r, l, .. } = *inputs;
    if max_degree == 0 {
        return Err(BoundsError::NonPositive("maximum degree"));
    }
    if min_degree == 0 {
        return Err(BoundsError::NonPositive("minimum degree"));
    }
    if l == 0 {
        return Err(BoundsError::NonPositive("l"));
    }
    if min_degree > max_degree {
        return Err(BoundsError::DegreeOrder { min: min_degree, max: max_degree });
    }
    if r < 2 {
        return Err(BoundsError::SmallR);
    }
    let (big, small, rf, lf) = (max_degree as f64, min_degree as f64, r as f64, l as f64);
    let ln_big = big.ln();
    let mut entries = Vec::new();

    let mut greedy = BoundEntry::new("greedy", "ch_r <= r*Delta + 1");
    greedy.applicable = Some(true);
    greedy.bound = Some(rf * big + 1.0);
    entries.push(greedy);

    let mut t1 = BoundEntry::new(
        "degree_condition",
        "((r+1) ln Delta + (r-1) ln r + 1) * ((l+s)/s)^(r-1) <= delta  =>  ch_r <= l + s + r - 2  (s >= r-1)",
    );
    match inputs.s {
        Some(s) if s + 1 >= r => {
            t1 = t1.condition(degree_condition_lhs(max_degree, r, s, l), small);
            t1.bound = Some((l + s + r - 2) as f64);
            t1.derived.insert("s", s as f64);
        }
        Some(s) => {
            t1.applicable = Some(false);
            t1.derived.insert("s", s as f64);
            t1.assumptions.push("requires s >= r - 1");
        }
        None => t1.assumptions.push("s not supplied"),
    }
    entries.push(t1);

    let ratio = big / small;
    let threshold = large_choice_threshold(r, ratio);
    let slack = large_choice_slack(r, ratio, l);
    let mut c6 = BoundEntry::new(
        "large_choice_number",
        "l >= 6^(2r) r^(3r) k^2, k = Delta/delta  =>  ch_r <= l + ceil((3 k r l^(r-2) ln l)^(1/(r-1))) + r - 2",
    )
    .condition(threshold, lf);
    c6.bound = Some(lf + slack + rf - 2.0);
    c6.derived.insert("k", ratio);
    c6.derived.insert("s", slack);
    entries.push(c6);

    let c7_lhs = ((rf + 1.0) * ln_big + (rf - 1.0) * rf.ln() + 1.0) * (lf + 1.0).powf(rf - 1.0);
    let mut c7 = BoundEntry::new(
        "choice_plus_r",
        "((r+1) ln Delta + (r-1) ln r + 1) * (l+1)^(r-1) <= delta  =>  ch_r <= l + r - 1",
    )
    .condition(c7_lhs, small);
    c7.bound = Some(lf + rf - 1.0);
    entries.push(c7);
    if r == 2 {
        let mut c7r2 = BoundEntry::new("choice_plus_one", "(3 ln Delta + 2) * (l+1) <= delta  =>  ch_2 <= l + 1")
            .condition((3.0 * ln_big + 2.0) * (lf + 1.0), small);
        c7r2.bound = Some(lf + 1.0);
        entries.push(c7r2);
    }

    let mut c8 = BoundEntry::new("random_graph", "G(n,p) with 2/n < p <= 1/2  =>  a.a.s. ch_2 <= l + C");
    c8.symbolic_bound = Some(format!("{l} + C  (C = 9*c2, c2 the upper choosability constant for G(n,p))"));
    c8.assumptions.push("asymptotic; r = 2");
    if let (Some(n), Some(p)) = (inputs.n, inputs.p) {
        c8.applicable = Some(n > 0 && 2.0 / (n as f64) < p && p <= 0.5);
        c8.derived.insert("n", n as f64);
        c8.derived.insert("p", p);
    }
    entries.push(c8);

    let mut t9 =
        BoundEntry::new("triangle_free", "triangle-free, delta >= 6 ln Delta + 2  =>  ch_2 <= l + 86 Delta / delta")
            .condition(6.0 * ln_big + 2.0, small);
    let s9 = 86.0 * big / small;
    t9.bound = Some(lf + s9);
    t9.derived.insert("s", s9);
    t9.derived.insert("johansson_l_max", 13.0 * big / ln_big);
    t9.assumptions.push("G triangle-free");
    t9.assumptions.push("r = 2");
    entries.push(t9);

    let mut c10 = BoundEntry::new(
        "sparse_neighborhoods",
        "each G[N(v)] has <= Delta^2/f edges, Delta/delta <= c  =>  ch_2 <= l + K' Delta ln Delta / (delta ln f)",
    );
    c10.assumptions.push("K' is an unspecified absolute constant");
    match inputs.f {
        Some(f) if f > 1.0 => {
            let coeff = big * ln_big / (small * f.ln());
            c10.derived.insert("coefficient", coeff);
            c10.symbolic_bound = Some(format!("{l} + K' * {coeff}"));
        }
        _ => c10.symbolic_bound = Some(format!("{l} + K' * Delta ln Delta / (delta ln f)")),
    }
    entries.push(c10);

    Ok(BoundsReport { inputs: inputs.clone(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input(max_degree: usize, min_degree: usize, r: usize, l: usize, s: Option<usize>) -> BoundsInput {
        BoundsInput { max_degree, min_degree, r, l, s, n: None, p: None, f: None }
    }

    #[test]
    fn regular_triangle_free_case() {
        let rep = bounds_report(&input(43, 43, 2, 10, None)).unwrap();
        let t9 = rep.entry("triangle_free").unwrap();
        assert_eq!(t9.bound, Some(10.0 + 86.0));
        assert_eq!(t9.applicable, Some(true));
        assert!((t9.hypothesis_lhs.unwrap() - 24.567_200_694_161_375).abs() < 1e-9);
    }

    #[test]
    fn degree_condition_example() {
        let rep = bounds_report(&input(24, 24, 2, 3, Some(3))).unwrap();
        let t1 = rep.entry("degree_condition").unwrap();
        assert_eq!(t1.applicable, Some(true));
        assert_eq!(t1.bound, Some(6.0));
        let rep = bounds_report(&input(10, 10, 2, 3, Some(3))).unwrap();
        assert_eq!(rep.entry("degree_condition").unwrap().applicable, Some(false));
        let rep = bounds_report(&input(10, 10, 3, 3, Some(1))).unwrap();
        assert_eq!(rep.entry("degree_condition").unwrap().applicable, Some(false));
    }

    #[test]
    fn corollaries() {
        let rep = bounds_report(&input(1000, 1000, 2, 20, None)).unwrap();
        let c7 = rep.entry("choice_plus_one").unwrap();
        // (3 ln 1000 + 2) * 21 = 477.2... <= 1000
        assert_eq!(c7.applicable, Some(true));
        assert_eq!(c7.bound, Some(21.0));
        let c6 = rep.entry("large_choice_number").unwrap();
        assert_eq!(c6.hypothesis_lhs, Some(82_944.0));
        assert_eq!(c6.applicable, Some(false));
        // r = 2: s = ceil(3 k r ln l) = ceil(6 ln 20) = 18
        assert_eq!(c6.derived["s"], 18.0);
        assert!(rep.entry("random_graph").unwrap().applicable.is_none());
        assert!(rep.entry("sparse_neighborhoods").unwrap().bound.is_none());
    }

    #[test]
    fn random_graph_range() {
        let mut inp = input(10, 5, 2, 3, None);
        inp.n = Some(100);
        inp.p = Some(0.1);
        assert_eq!(bounds_report(&inp).unwrap().entry("random_graph").unwrap().applicable, Some(true));
        inp.p = Some(0.02);
        assert_eq!(bounds_report(&inp).unwrap().entry("random_graph").unwrap().applicable, Some(false));
        inp.p = Some(0.6);
        assert_eq!(bounds_report(&inp).unwrap().entry("random_graph").unwrap().applicable, Some(false));
    }

    #[test]
    fn input_validation() {
        assert!(bounds_report(&input(0, 0, 2, 1, None)).is_err());
        assert_eq!(bounds_report(&input(3, 5, 2, 1, None)), Err(BoundsError::DegreeOrder { min: 5, max: 3 }));
        assert_eq!(bounds_report(&input(5, 5, 1, 1, None)), Err(BoundsError::SmallR));
    }
}
