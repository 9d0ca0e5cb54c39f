//! Browser bindings: every entry point takes expression strings and returns
//! a JSON document, `{"error": "..."}` on failure.

use diffrad::diffcalc::delta_k;
use diffrad::parser::{eval_factored, eval_input, parse_input};
use diffrad::poly::{factor, FactoredPoly, Poly};
use diffrad::scalar::{ExactScalar, Scalar, Tolerance};
use diffrad::shiftcalc::{chain_decomposition, gcd_tower, rad_delta, rad_delta_q};
use diffrad::theorems::mason_delta;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

// Selects the browser entropy source for a transitive dependency.
#[cfg(target_arch = "wasm32")]
use getrandom as _;

type Exact = ExactScalar;

fn read(src: &str) -> Result<FactoredPoly<Exact>, String> {
    let input = parse_input(src).map_err(|e| e.to_string())?;
    if let Some(f) = eval_factored(&input).map_err(|e| e.to_string())? {
        return Ok(f);
    }
    let p = eval_input(&input).map_err(|e| e.to_string())?;
    if p.is_zero() {
        return Err("the zero polynomial has no zeros to analyze".into());
    }
    factor(&p, &[]).map_err(|e| e.to_string())
}

fn point(w: &Exact) -> Value {
    let (re, im) = w.to_f64_pair();
    json!({ "text": w.to_string(), "re": re, "im": im })
}

fn poly(p: &Poly<Exact>) -> Value {
    json!({ "text": p.to_string(), "degree": p.deg() })
}

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// Zeros, chains of consecutive zeros and difference radicals of `src`.
pub fn analyze_value(src: &str) -> Result<Value, String> {
    let f = read(src)?;
    let err = |e: diffrad::Error| e.to_string();
    let chains = chain_decomposition(&f).map_err(err)?;
    let chain_list: Vec<Value> = chains
        .chains
        .iter()
        .enumerate()
        .map(|(k, (start, len))| {
            let members: Vec<Value> = (0..*len as i64)
                .map(|j| point(&start.plus(&Exact::from_i64(j))))
                .collect();
            json!({ "id": k, "start": point(start), "length": len, "members": members })
        })
        .collect();
    let zeros: Vec<Value> = f
        .roots()
        .iter()
        .map(|(w, m)| json!({ "point": point(w), "multiplicity": m }))
        .collect();
    Ok(json!({
        "poly": poly(&f.expand()),
        "zeros": zeros,
        "chains": chain_list,
        "rad_delta": poly(&rad_delta(&f).map_err(err)?),
        "rad_delta_2": poly(&rad_delta_q(&f, 2).map_err(err)?),
        "gcd_p_delta_p": poly(&gcd_tower(&f, 1).map_err(err)?),
    }))
}

/// `Δ^k` of `src` for `k = 0..=max_k` (stopping at the zero polynomial).
pub fn differences_value(src: &str, max_k: usize) -> Result<Value, String> {
    let input = parse_input(src).map_err(|e| e.to_string())?;
    let p = eval_input(&input).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for k in 0..=max_k.min(32) {
        let d = delta_k(&p, k);
        let done = d.is_zero();
        rows.push(json!({ "k": k, "poly": poly(&d) }));
        if done {
            break;
        }
    }
    Ok(json!({ "rows": rows }))
}

/// Difference Mason check of `a + b = c`.
pub fn mason_value(a: &str, b: &str, c: &str) -> Result<Value, String> {
    let abc = [read(a)?, read(b)?, read(c)?];
    let report = mason_delta(&abc, Tolerance::Auto).map_err(|e| e.to_string())?;
    serde_json::to_value(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn analyze(src: &str) -> String {
    respond(analyze_value(src))
}

#[wasm_bindgen]
pub fn differences(src: &str, max_k: usize) -> String {
    respond(differences_value(src, max_k))
}

#[wasm_bindgen]
pub fn mason(a: &str, b: &str, c: &str) -> String {
    respond(mason_value(a, b, c))
}
