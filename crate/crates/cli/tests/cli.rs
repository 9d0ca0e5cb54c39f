//! End-to-end runs of the `diffrad` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn diffrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diffrad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = diffrad(&all);
    assert_eq!(code(&o), 0, "{args:?}: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

const TWO_CHAIN: &str = "roots(1; 0:2, 1:1, 2:1)";

#[test]
fn difference_radical_as_text() {
    let o = diffrad(&["rad-delta", TWO_CHAIN]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "z^2\n");
}

#[test]
fn wrong_arity_is_a_usage_error() {
    let o = diffrad(&["mason", "ff(z,1)", "ff(z,1)"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("3 values required"), "{}", stderr(&o));
}

#[test]
fn parse_errors_report_the_offset() {
    let o = diffrad(&["delta", "z + * 3"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("offset 4"), "{}", stderr(&o));
    // The same offset when the expression starts with a minus sign.
    let o = diffrad(&["delta", "-z + * 3"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("offset 5"), "{}", stderr(&o));
}

#[test]
fn unsplit_input_is_a_computational_error() {
    let o = diffrad(&["rad-delta", "z^3 + 2"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("supply factored input"), "{}", stderr(&o));
}

#[test]
fn heights_of_the_two_chain_example() {
    for (at, h) in [("0", 3), ("1", 2), ("2", 1), ("3", 0)] {
        assert_eq!(json(&["height", TWO_CHAIN, "--at", at])["height"], h);
    }
}

#[test]
fn leading_minus_signs_and_trailing_flags() {
    let r = json(&["mason", "z*(z-1)", "-(z-4)*(z-5)", "4*(2*z-5)"]);
    assert_eq!(r["theorem"], "difference");
    assert_eq!(r["slack"], 0);
    assert_eq!(r["sharp"], true);
    let r = json(&["mason", "z*(z-1)", "-(z-4)*(z-5)", "4*(2*z-5)", "--classical"]);
    assert_eq!(r["theorem"], "classical");
    let r = json(&["rad-kappa", "roots(1; -1:1, 0:2, 1:3, 2:2, 4:1)", "--kappa", "-1"]);
    assert_eq!(r["text"], "z^4 - 4*z^3 - z^2 + 4*z");
}

#[test]
fn variadic_commands_accept_trailing_options() {
    let r = json(&["casoratian", "1", "z", "z^2", "--form", "shift"]);
    assert_eq!(r["text"], "2");
    let r = json(&[
        "fermat-multi",
        "(1/2)*sqrt(2)*z + 1",
        "(1/2)*z + (1/2)*(sqrt(2) - sqrt(6))",
        "(1/2)*sqrt(3)*i*z + (1/2)*i*(sqrt(6) - sqrt(2))",
        "--rhs-one",
        "--n",
        "2",
    ]);
    assert_eq!(r["identity_holds"], true);
    assert_eq!(r["bound"], "5/1");
}

#[test]
fn common_shifting_divisors() {
    let r = json(&["shifting-prime", "z*(z-1)*(z-2)", "(z-2)*(z-3)*(z-4)"]);
    assert_eq!(r["shifting_prime"], false);
    assert_eq!(r["common_divisors"], serde_json::json!(["0", "1/1", "2/1"]));
    let r = json(&["shifting-prime", "z", "z - 5/2"]);
    assert_eq!(r["shifting_prime"], true);
}

#[test]
fn newton_and_delta() {
    let r = json(&["newton", "z^3", "--at", "0"]);
    assert_eq!(r["coeffs"], serde_json::json!(["0", "1/1", "3/1", "1/1"]));
    let r = json(&["delta", "ff(z, 4)", "--k", "2"]);
    assert_eq!(r["text"], json(&["delta", "12*ff(z, 2)", "--k", "0"])["text"]);
}

#[test]
fn numeric_backend_for_the_cubic_unit_triad() {
    let r = json(&["--backend", "numeric", "catalog", "cubic-unit-triad"]);
    let reports = r.as_array().unwrap();
    assert_eq!(reports.len(), 9);
    for rep in reports {
        assert!(rep["residual_sup"].as_f64().unwrap() < 1e-25, "{rep}");
    }
}

#[test]
fn numeric_backend_prints_clean_polynomials() {
    let o = diffrad(&["--backend", "numeric", "rad", "z^2 - 2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "z^2 - 2e0\n");
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        vec!["--json", "chains", "roots(1; -1:1, 0:2, 1:3, 2:2, 4:1)"],
        vec![
            "--json",
            "fermat",
            "z^2",
            "-(1/2)*i*(sqrt(2)*z^2 + 2*z - sqrt(2))",
            "-(1/2)*(sqrt(2)*z^2 - 2*z - sqrt(2))",
            "--n",
            "3",
        ],
        vec![
            "--json",
            "--backend",
            "numeric",
            "--precision",
            "128",
            "chains",
            "z^2 - 2",
        ],
    ] {
        assert_eq!(diffrad(&args).stdout, diffrad(&args).stdout, "{args:?}");
    }
}

#[test]
fn generated_instances_follow_the_seed() {
    let a = json(&["--seed", "11", "generate", "--m", "3"]);
    let b = json(&["--seed", "11", "generate", "--m", "3"]);
    let c = json(&["--seed", "12", "generate", "--m", "3"]);
    assert_eq!(a, b);
    assert_ne!(a["polynomials"], c["polynomials"]);
    assert_eq!(a["report"]["equation_holds"], true);
    assert_eq!(a["report"]["counterexample"], false);
}

#[test]
fn fixture_suite_passes_in_name_order() {
    let o = diffrad(&["verify-paper"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let r = json(&["verify-paper"]);
    assert_eq!(r["failed"], 0);
    let names: Vec<&str> = r["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for c in r["cases"].as_array().unwrap() {
        let source = c["source"].as_str().unwrap();
        assert!(
            source.starts_with("paper:") || source.starts_with("derived:"),
            "{source}"
        );
    }
    for required in [
        "two-chain-height-at-0",
        "double-triple-height-at-0",
        "two-chain-rad-delta",
        "four-chain-rad-delta",
        "sharp-difference-mason",
        "sharp-extended-mason",
        "falling-square-triple",
        "linear-unit-triad",
        "quadratic-unit-triad",
        "cubic-unit-triad",
        "common-shifting-divisors",
    ] {
        assert!(names.contains(&required), "missing {required}");
    }
}

#[test]
fn fixture_filter() {
    let r = json(&["verify-paper", "--filter", "unit-triad"]);
    assert_eq!(r["cases"].as_array().unwrap().len(), 3);
    let o = diffrad(&["verify-paper", "--filter", "no-such-fixture"]);
    assert_eq!(code(&o), 2);
}
