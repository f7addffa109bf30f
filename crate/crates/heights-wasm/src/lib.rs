//! Browser bindings for the heights library.
//!
//! Each export takes plain text, runs the same exact arithmetic as the
//! CLI inside WebAssembly, and returns a JSON string for the page to
//! render. Failures come back as `{"error": "..."}` rather than thrown
//! exceptions, so the page handles both outcomes uniformly. The functions
//! are ordinary Rust functions on native targets, which is how the test
//! suite exercises them.

use wasm_bindgen::prelude::wasm_bindgen;

use heights::bounds::tightness_experiment;
use heights::cauchy::cauchy_interpolate_auto;
use heights::interpolate::NodeSet;
use heights::{height_affine_tuple, height_projective_tuple, Rational};

/// Ceilings keeping the demo responsive in a single browser thread.
const DMAX_CAP: u64 = 6;
const TRIALS_CAP: u64 = 500;

fn err_json(message: impl AsRef<str>) -> String {
    serde_json::json!({ "error": message.as_ref() }).to_string()
}

fn parse_rationals(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|e| e.to_string()))
        .collect()
}

/// Heights of comma-separated rationals: each value's own height, the
/// affine tuple height, and the projective height (null for the zero
/// tuple, which has no projective height).
#[wasm_bindgen]
pub fn height_report(values: &str) -> String {
    let xs = match parse_rationals(values) {
        Ok(xs) => xs,
        Err(e) => return err_json(e),
    };
    let rendered: Vec<String> = xs.iter().map(Rational::to_string).collect();
    let heights: Vec<f64> = xs.iter().map(|x| x.height().value()).collect();
    let affine = height_affine_tuple(&xs).value();
    let projective = height_projective_tuple(&xs).ok().map(|h| h.value());
    serde_json::json!({
        "values": rendered,
        "heights": heights,
        "affine_height": affine,
        "projective_height": projective,
    })
    .to_string()
}

/// The rational fraction of total degree at most `degree` through the
/// given integer nodes and rational values (2·degree + 1 nodes needed),
/// in the "num | den" text format, with its degree profile and height.
#[wasm_bindgen]
pub fn reconstruct_fraction(nodes: &str, values: &str, degree: u32) -> String {
    let points: Result<Vec<i64>, String> = nodes
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| format!("malformed integer node: offending token {t:?}"))
        })
        .collect();
    let points = match points {
        Ok(p) => p,
        Err(e) => return err_json(e),
    };
    let nodes = match NodeSet::spanning(points) {
        Ok(n) => n,
        Err(e) => return err_json(e.to_string()),
    };
    let values = match parse_rationals(values) {
        Ok(v) => v,
        Err(e) => return err_json(e),
    };
    match cauchy_interpolate_auto(&nodes, &values, degree as usize) {
        Ok(f) => serde_json::json!({
            "fraction": f.to_string(),
            "numerator_degree": f.num().degree_or_zero(),
            "denominator_degree": f.den().degree_or_zero(),
            "height": f.height().value(),
        })
        .to_string(),
        Err(e) => err_json(e.to_string()),
    }
}

/// Tightness rows (trial, d, hF, both bounds, both ratios) for degrees
/// 1..=dmax with `trials` random fractions each, deterministic in the
/// seed. Sizes are capped so the page stays responsive.
#[wasm_bindgen]
pub fn tightness_rows(dmax: u32, trials: u32, seed: u32) -> String {
    let dmax = dmax as u64;
    let trials = trials as u64;
    if dmax < 1 || dmax > DMAX_CAP {
        return err_json(format!("dmax must be between 1 and {DMAX_CAP}"));
    }
    if trials < 1 || trials > TRIALS_CAP {
        return err_json(format!("trials must be between 1 and {TRIALS_CAP}"));
    }
    let rows = tightness_experiment(dmax, trials, seed as u64);
    serde_json::to_string(&rows).expect("plain structs")
}
