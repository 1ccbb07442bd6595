//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function returns a JSON string; the `*_json` functions hold
//! the logic so they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use rdyn_core::bounds::{bounds_report, BoundsInput};
use rdyn_core::coloring::{is_r_dynamic, neighborhood_color_count, Coloring};
use rdyn_core::experiment::random_lists;
use rdyn_core::generate::{generate, rng_from_seed, GraphKind};
use rdyn_core::graph::Graph;
use rdyn_core::greedy::greedy_r_dynamic;
use rdyn_core::lll::{theorem1_pipeline, PipelineOutcome};

/// Largest graph the page will draw.
const MAX_N: usize = 60;

#[derive(Serialize)]
struct Drawing {
    n: usize,
    edges: Vec<[usize; 2]>,
    coloring: Option<Coloring>,
    /// Distinct colors seen on each neighborhood.
    seen: Option<Vec<usize>>,
    valid: Option<bool>,
    colors_used: Option<usize>,
}

impl Drawing {
    fn new(g: &Graph, coloring: Option<Coloring>, r: usize) -> Self {
        let seen = coloring.as_ref().map(|c| (0..g.n()).map(|v| neighborhood_color_count(g, c, v)).collect());
        let valid = coloring.as_ref().map(|c| is_r_dynamic(g, c, r));
        let colors_used = coloring.as_ref().map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        });
        Drawing { n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect(), coloring, seen, valid, colors_used }
    }
}

fn check_n(n: usize) -> Result<(), String> {
    if n > MAX_N {
        return Err(format!("n = {n} is above the demo limit of {MAX_N}"));
    }
    Ok(())
}

fn to_string<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// G(n, p) colored greedily from random lists of size `rΔ+1`.
pub fn greedy_json(n: usize, p: f64, r: usize, seed: u64) -> Result<String, String> {
    check_n(n)?;
    let g = generate(GraphKind::Gnp { n, p }, seed).map_err(|e| e.to_string())?;
    let size = r * g.max_degree() + 1;
    let lists = random_lists(n, size, &mut rng_from_seed(seed.wrapping_add(1)));
    let coloring = greedy_r_dynamic(&g, &lists, r, None).map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Out {
        graph: Drawing,
        list_size: usize,
    }
    to_string(&Out { graph: Drawing::new(&g, Some(coloring), r), list_size: size })
}

/// Random d-regular graph run through sublist resampling with lists of size `l + s + r - 2`.
pub fn pipeline_json(n: usize, d: usize, l: usize, s: usize, r: usize, seed: u64) -> Result<String, String> {
    check_n(n)?;
    let g = generate(GraphKind::RandomRegular { n, d }, seed).map_err(|e| e.to_string())?;
    let size = (l + s + r).checked_sub(2).filter(|&x| x > 0).ok_or("list size must be positive")?;
    let lists = random_lists(n, size, &mut rng_from_seed(seed.wrapping_add(1)));
    let report = theorem1_pipeline(&g, &lists, l, r, seed, None).map_err(|e| e.to_string())?;
    let coloring = match &report.outcome {
        PipelineOutcome::Colored { coloring } => Some(coloring.clone()),
        _ => None,
    };
    #[derive(Serialize)]
    struct Out<'a> {
        graph: Drawing,
        list_size: usize,
        status: &'a str,
        iterations: usize,
        draws: u64,
    }
    let status = match report.outcome {
        PipelineOutcome::Colored { .. } => "colored",
        PipelineOutcome::ResampleCapReached => "resample cap reached",
        PipelineOutcome::ListColoringFailed => "sublists admit no proper coloring",
    };
    to_string(&Out {
        graph: Drawing::new(&g, coloring, r),
        list_size: size,
        status,
        iterations: report.log.iterations,
        draws: report.draws,
    })
}

pub fn bounds_json(
    min_degree: usize,
    max_degree: usize,
    r: usize,
    l: usize,
    s: Option<usize>,
) -> Result<String, String> {
    let input = BoundsInput { max_degree, min_degree, r, l, s, n: None, p: None, f: None };
    to_string(&bounds_report(&input).map_err(|e| e.to_string())?)
}

#[wasm_bindgen]
pub fn greedy_demo(n: usize, p: f64, r: usize, seed: u32) -> Result<String, JsValue> {
    greedy_json(n, p, r, seed as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn pipeline_demo(n: usize, d: usize, l: usize, s: usize, r: usize, seed: u32) -> Result<String, JsValue> {
    pipeline_json(n, d, l, s, r, seed as u64).map_err(|e| JsValue::from_str(&e))
}

/// `s = 0` means "not given".
#[wasm_bindgen]
pub fn bounds_demo(min_degree: usize, max_degree: usize, r: usize, l: usize, s: usize) -> Result<String, JsValue> {
    bounds_json(min_degree, max_degree, r, l, (s > 0).then_some(s)).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn greedy_output_is_valid() {
        let v: Value = serde_json::from_str(&greedy_json(20, 0.3, 2, 4).unwrap()).unwrap();
        assert_eq!(v["graph"]["valid"], true);
        assert_eq!(v["graph"]["coloring"].as_array().unwrap().len(), 20);
        assert_eq!(greedy_json(20, 0.3, 2, 4).unwrap(), greedy_json(20, 0.3, 2, 4).unwrap());
    }

    #[test]
    fn pipeline_reports_status() {
        let v: Value = serde_json::from_str(&pipeline_json(24, 6, 3, 2, 2, 1).unwrap()).unwrap();
        let status = v["status"].as_str().unwrap();
        if status == "colored" {
            assert_eq!(v["graph"]["valid"], true);
        } else {
            assert!(v["graph"]["coloring"].is_null());
        }
        assert_eq!(v["list_size"], 5);
    }

    #[test]
    fn bounds_and_errors() {
        let v: Value = serde_json::from_str(&bounds_json(43, 43, 2, 10, None).unwrap()).unwrap();
        let t9 = v["entries"].as_array().unwrap().iter().find(|e| e["id"] == "triangle_free").unwrap();
        assert_eq!(t9["bound"], 96.0);
        assert!(bounds_json(0, 3, 2, 1, None).is_err());
        assert!(greedy_json(MAX_N + 1, 0.1, 2, 0).is_err());
        assert!(pipeline_json(5, 3, 2, 1, 2, 0).is_err());
    }
}
