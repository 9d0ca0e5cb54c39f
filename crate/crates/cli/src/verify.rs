//! The bundled fixture suite.
//!
//! Each fixture is one JSON document:
//!
//! ```json
//! {
//!   "name": "...", "source": "...", "command": "rad-delta",
//!   "inputs": ["roots(1; 0:2, 1:1, 2:1)"], "args": {"kappa": 1},
//!   "backend": "exact", "precision": 256, "tolerance": null,
//!   "expected": {"text": "z^2"}
//! }
//! ```
//!
//! A fixture is replayed as a command line, so it exercises exactly the
//! code path a user would. `expected` is matched as a subset of the JSON
//! output: objects may carry extra keys, arrays must match element by
//! element, and a string such as `"< 1e-25"` compares numerically.

use std::fmt::Write as _;

use clap::Parser;
use serde_json::{json, Value};

use crate::exec::Failure;
use crate::{print_out, Cli};

mod embedded {
    include!(concat!(env!("OUT_DIR"), "/fixtures.rs"));
}

/// Outcome of one fixture.
struct CaseResult {
    name: String,
    source: String,
    mismatches: Vec<String>,
}

fn field<'a>(doc: &'a Value, key: &str) -> Result<&'a Value, String> {
    doc.get(key).ok_or_else(|| format!("missing field '{key}'"))
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// The command line a fixture stands for.
fn argv(doc: &Value) -> Result<Vec<String>, String> {
    let mut args = vec!["diffrad".to_string(), "--json".to_string()];
    if let Some(b) = doc.get("backend") {
        args.extend(["--backend".into(), text(b)]);
    }
    if let Some(p) = doc.get("precision") {
        args.extend(["--precision".into(), text(p)]);
    }
    if let Some(t) = doc.get("tolerance").filter(|t| !t.is_null()) {
        args.extend(["--tolerance".into(), text(t)]);
    }
    args.push(text(field(doc, "command")?));
    if let Some(Value::Object(opts)) = doc.get("args") {
        for (key, value) in opts {
            match value {
                Value::Bool(true) => args.push(format!("--{key}")),
                Value::Bool(false) | Value::Null => {}
                v => args.extend([format!("--{key}"), text(v)]),
            }
        }
    }
    let inputs = match doc.get("inputs") {
        Some(Value::Array(xs)) => xs.iter().map(text).collect(),
        None => Vec::new(),
        Some(_) => return Err("'inputs' must be a list".into()),
    };
    if !inputs.is_empty() {
        args.push("--".into());
        args.extend(inputs);
    }
    Ok(args)
}

fn comparator(pattern: &str) -> Option<(&str, f64)> {
    let (op, rest) = pattern
        .strip_prefix("<=")
        .map(|r| ("<=", r))
        .or_else(|| pattern.strip_prefix('<').map(|r| ("<", r)))?;
    rest.trim().parse().ok().map(|bound| (op, bound))
}

/// Records every place where `actual` does not contain `expected`.
fn compare(expected: &Value, actual: &Value, path: &str, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(want), Value::Object(got)) => {
            for (key, w) in want {
                let p = format!("{path}.{key}");
                match got.get(key) {
                    Some(g) => compare(w, g, &p, out),
                    None => out.push(format!("{p}: missing")),
                }
            }
        }
        (Value::Array(want), Value::Array(got)) => {
            if want.len() != got.len() {
                out.push(format!("{path}: expected {} elements, got {}", want.len(), got.len()));
                return;
            }
            for (k, (w, g)) in want.iter().zip(got).enumerate() {
                compare(w, g, &format!("{path}[{k}]"), out);
            }
        }
        (Value::String(pattern), Value::Number(n)) if comparator(pattern).is_some() => {
            let (op, bound) = comparator(pattern).expect("checked above");
            let x = n.as_f64().unwrap_or(f64::NAN);
            let ok = if op == "<" { x < bound } else { x <= bound };
            if !ok {
                out.push(format!("{path}: {x:e} is not {op} {bound:e}"));
            }
        }
        (Value::Number(w), Value::Number(g)) if w.as_f64() == g.as_f64() => {}
        (w, g) if w == g => {}
        (w, g) => out.push(format!("{path}: expected {w}, got {g}")),
    }
}

fn run_case(doc: &Value) -> Vec<String> {
    let expected = match field(doc, "expected") {
        Ok(e) => e,
        Err(e) => return vec![e],
    };
    let cli = match argv(doc).and_then(|a| Cli::try_parse_from(a).map_err(|e| e.to_string())) {
        Ok(cli) => cli,
        Err(e) => return vec![format!("bad command line: {}", e.trim())],
    };
    match cli.run() {
        Ok(report) => {
            let mut out = Vec::new();
            compare(expected, &report.json, "$", &mut out);
            out
        }
        Err(Failure::Usage(e) | Failure::Compute(e)) => vec![format!("command failed: {e}")],
    }
}

fn load(fixtures: &[(&str, &str)]) -> Vec<(String, Result<Value, String>)> {
    fixtures
        .iter()
        .map(|(path, body)| (path.to_string(), serde_json::from_str(body).map_err(|e| e.to_string())))
        .collect()
}

/// Runs the suite and returns the exit status: 0 when every selected
/// fixture passes, 3 on any mismatch, 2 when the filter selects nothing.
pub fn run(filter: Option<&str>, as_json: bool) -> u8 {
    run_suite(embedded::FIXTURES, filter, as_json)
}

fn run_suite(fixtures: &[(&str, &str)], filter: Option<&str>, as_json: bool) -> u8 {
    let mut results: Vec<CaseResult> = load(fixtures)
        .into_iter()
        .map(|(path, doc)| match doc {
            Ok(doc) => CaseResult {
                name: doc.get("name").map_or_else(|| path.clone(), text),
                source: doc.get("source").map(text).unwrap_or_default(),
                mismatches: run_selected(&doc, filter),
            },
            Err(e) => CaseResult {
                name: path,
                source: String::new(),
                mismatches: vec![format!("invalid fixture: {e}")],
            },
        })
        .filter(|r| filter.is_none_or(|f| r.name.contains(f)))
        .collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    if results.is_empty() {
        eprintln!("error: no fixture matches the filter");
        return 2;
    }
    let failed = results.iter().filter(|r| !r.mismatches.is_empty()).count();
    if as_json {
        let cases: Vec<Value> = results
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "source": r.source,
                    "passed": r.mismatches.is_empty(),
                    "mismatches": r.mismatches,
                })
            })
            .collect();
        let doc = json!({ "cases": cases, "passed": results.len() - failed, "failed": failed });
        print_out(&serde_json::to_string_pretty(&doc).expect("valid JSON"));
    } else {
        let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut table = String::new();
        for r in &results {
            let status = if r.mismatches.is_empty() { "PASS" } else { "FAIL" };
            let _ = writeln!(table, "{status}  {:width$}  {}", r.name, r.source);
            for m in &r.mismatches {
                let _ = writeln!(table, "      {m}");
            }
        }
        let _ = write!(table, "{} passed, {failed} failed", results.len() - failed);
        print_out(&table);
    }
    if failed == 0 {
        0
    } else {
        3
    }
}

/// Runs a fixture only when the filter selects it; skipped ones report no
/// mismatches and are dropped afterwards.
fn run_selected(doc: &Value, filter: Option<&str>) -> Vec<String> {
    let name = doc.get("name").map(text).unwrap_or_default();
    if filter.is_some_and(|f| !name.contains(f)) {
        return Vec::new();
    }
    run_case(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mismatches(expected: Value, actual: Value) -> Vec<String> {
        let mut out = Vec::new();
        compare(&expected, &actual, "$", &mut out);
        out
    }

    #[test]
    fn subset_matching() {
        assert!(mismatches(json!({"a": 1}), json!({"a": 1, "b": 2})).is_empty());
        assert_eq!(mismatches(json!({"c": 1}), json!({"a": 1})).len(), 1);
        assert_eq!(mismatches(json!([1, 2]), json!([1])).len(), 1);
        assert!(mismatches(json!({"r": "< 1e-25"}), json!({"r": 3e-30})).is_empty());
        assert_eq!(mismatches(json!({"r": "< 1e-25"}), json!({"r": 1e-20})).len(), 1);
        assert!(mismatches(json!({"r": "<= 0"}), json!({"r": 0.0})).is_empty());
        assert!(mismatches(json!({"n": 5}), json!({"n": 5.0})).is_empty());
        // A comparator string is matched literally against strings.
        assert!(mismatches(json!("< 1"), json!("< 1")).is_empty());
    }

    #[test]
    fn fixture_command_lines() {
        let doc = json!({
            "command": "fermat", "inputs": ["-z", "z"], "args": {"n": 2, "classical": true, "x": false},
            "backend": "exact", "precision": 128, "tolerance": null
        });
        assert_eq!(
            argv(&doc).unwrap(),
            [
                "diffrad",
                "--json",
                "--backend",
                "exact",
                "--precision",
                "128",
                "fermat",
                "--classical",
                "--n",
                "2",
                "--",
                "-z",
                "z"
            ]
        );
    }

    #[test]
    fn mismatch_and_empty_selection_statuses() {
        let good = r#"{"name": "g", "source": "derived:hand", "command": "rad-delta",
                       "inputs": ["z^2*(z-1)"], "expected": {"text": "z^2"}}"#;
        let bad = r#"{"name": "b", "source": "derived:hand", "command": "rad-delta",
                      "inputs": ["z^2*(z-1)"], "expected": {"text": "z^3"}}"#;
        assert_eq!(run_suite(&[("g.json", good)], None, true), 0);
        assert_eq!(run_suite(&[("g.json", good), ("b.json", bad)], None, true), 3);
        assert_eq!(run_suite(&[("g.json", good), ("b.json", bad)], Some("g"), true), 0);
        assert_eq!(run_suite(&[("g.json", good)], Some("nothing"), true), 2);
        assert_eq!(run_suite(&[("x.json", "{not json")], None, true), 3);
    }

    #[test]
    fn every_fixture_is_well_formed() {
        for (path, doc) in load(embedded::FIXTURES) {
            let doc = doc.unwrap_or_else(|e| panic!("{path}: {e}"));
            for key in ["name", "source", "command", "expected"] {
                assert!(doc.get(key).is_some(), "{path}: missing {key}");
            }
            let source = text(&doc["source"]);
            assert!(
                source.starts_with("paper:") || source.starts_with("derived:"),
                "{path}: source '{source}'"
            );
        }
    }
}
