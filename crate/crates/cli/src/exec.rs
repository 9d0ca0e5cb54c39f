//! Runs one parsed command on a chosen scalar backend.

use std::fmt::Write as _;

use diffrad::casorati::{casoratian, CasoratiForm};
use diffrad::diffcalc::{delta_k, to_newton};
use diffrad::parser::{eval_factored, eval_input, eval_scalar, parse, parse_input};
use diffrad::poly::{classical_rad, factor_with, FactoredPoly, Poly, RootSolver};
use diffrad::scalar::{ExactScalar, Scalar, Tolerance};
use diffrad::shiftcalc::{
    chain_decomposition_tol, common_shifting_divisors_tol, gcd_tower_tol, rad_delta_q_tol, rad_delta_tol,
    rad_kappa_tol, shifting_zero_height_tol,
};
use diffrad::theorems::catalog;
use diffrad::theorems::{
    fermat_check, fermat_multi_check, gen_mason_instance, mason_classical, mason_delta, mason_delta_ext, FermatReport,
    MasonReport, RootGrid,
};
use serde_json::{json, Value};

use crate::{Command, Form};

/// Settings shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Context {
    pub precision: usize,
    pub tolerance: Tolerance,
    pub seed: u64,
}

/// What a command produced: text for people, JSON for machines.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    /// Every hypothesis holds but the inequality fails.
    pub counterexample: bool,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Self {
            text: text.into(),
            json,
            counterexample: false,
        }
    }
}

/// Failure classes, mapped to exit codes by the caller.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input or arguments.
    Usage(String),
    /// The computation itself failed.
    Compute(String),
}

impl From<diffrad::Error> for Failure {
    fn from(e: diffrad::Error) -> Self {
        match e {
            diffrad::Error::Parse { .. } | diffrad::Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

/// Reports always serialize; their fields are strings, numbers and lists.
macro_rules! to_json {
    ($x:expr) => {
        serde_json::to_value($x).expect("reports serialize to JSON")
    };
}

fn poly_json<S: Scalar>(p: &Poly<S>) -> Value {
    json!({
        "text": p.to_string(),
        "degree": p.deg(),
        "coeffs": p,
    })
}

/// Numeric results drop real and imaginary parts below the tolerance.
fn poly_report<S: Scalar>(p: &Poly<S>, tol: Tolerance) -> Report {
    let p = p.map(|c| c.denoised(tol));
    Report::new(p.to_string(), poly_json(&p))
}

fn exact_poly(src: &str) -> Outcome<Poly<ExactScalar>> {
    Ok(eval_input(&parse_input(src.trim_start())?)?)
}

fn read_poly<S: RootSolver>(src: &str, ctx: &Context) -> Outcome<Poly<S>> {
    Ok(exact_poly(src)?.map(|c| S::embed(c, ctx.precision)))
}

/// Factored form of an input: taken as written for `roots(...)`, otherwise
/// found by the backend's root solver.
fn read_factored<S: RootSolver>(src: &str, ctx: &Context) -> Outcome<FactoredPoly<S>> {
    let input = parse_input(src.trim_start())?;
    if let Some(f) = eval_factored(&input)? {
        return Ok(f.map(|c| S::embed(c, ctx.precision)));
    }
    let p = eval_input(&input)?.map(|c| S::embed(c, ctx.precision));
    if p.is_zero() {
        return Err(Failure::Usage(format!("'{}' is the zero polynomial", src.trim_start())));
    }
    Ok(factor_with(&p, &[], ctx.tolerance)?)
}

fn read_all<S: RootSolver>(srcs: &[String], ctx: &Context) -> Outcome<Vec<FactoredPoly<S>>> {
    srcs.iter().map(|s| read_factored(s, ctx)).collect()
}

fn read_scalar<S: RootSolver>(src: &str, ctx: &Context) -> Outcome<S> {
    Ok(S::embed(&eval_scalar(&parse(src.trim_start())?)?, ctx.precision))
}

fn triple<S: Scalar>(fs: Vec<FactoredPoly<S>>) -> [FactoredPoly<S>; 3] {
    fs.try_into()
        .unwrap_or_else(|_| unreachable!("clap enforces three inputs"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn mason_text(r: &MasonReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "theorem: {}", to_json!(&r.theorem).as_str().unwrap_or_default());
    let _ = writeln!(s, "equation holds: {}", yes_no(r.equation_holds));
    for h in &r.hypotheses {
        let _ = writeln!(s, "hypothesis {}: {} ({})", h.name, yes_no(h.holds), h.witness);
    }
    let _ = writeln!(s, "max degree: {}", r.lhs);
    let _ = writeln!(s, "bound: {}", r.rhs);
    let _ = write!(s, "slack: {}{}", r.slack, if r.sharp { " (sharp)" } else { "" });
    if r.counterexample {
        s.push_str("\nCOUNTEREXAMPLE: hypotheses hold but the inequality fails");
    }
    s
}

fn mason_report(r: MasonReport) -> Report {
    Report {
        text: mason_text(&r),
        counterexample: r.counterexample,
        json: to_json!(&r),
    }
}

fn fermat_text<S: Scalar>(r: &FermatReport<S>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "equation: {}", r.equation);
    let _ = writeln!(s, "identity holds: {}", yes_no(r.identity_holds));
    if !r.identity_holds || !S::EXACT {
        let _ = writeln!(s, "residual sup: {:e}", r.residual_sup);
    }
    for h in &r.hypotheses {
        let _ = writeln!(s, "hypothesis {}: {} ({})", h.name, yes_no(h.holds), h.witness);
    }
    let _ = write!(
        s,
        "exponent bound: n <= {} ({})",
        r.bound,
        if r.within_bound { "within" } else { "exceeded" }
    );
    if r.counterexample {
        s.push_str("\nCOUNTEREXAMPLE: identity and hypotheses hold beyond the bound");
    }
    s
}

fn fermat_report<S: Scalar>(r: FermatReport<S>) -> Report {
    Report {
        text: fermat_text(&r),
        counterexample: r.counterexample,
        json: to_json!(&r),
    }
}

/// Runs `cmd` with coefficients in `S`.
pub fn execute<S: RootSolver>(cmd: &Command, ctx: &Context) -> Outcome<Report> {
    let tol = ctx.tolerance;
    Ok(match cmd {
        Command::Delta { expr, k } => poly_report(&delta_k(&read_poly::<S>(expr, ctx)?, *k), tol),
        Command::Newton { expr, at } => {
            let e = to_newton(&read_poly::<S>(expr, ctx)?, &read_scalar(at, ctx)?)?;
            let terms: Vec<String> = e
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| format!("({c})*ff(z - ({}), {j})", e.base))
                .collect();
            let text = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            Report::new(text, to_json!(&e))
        }
        Command::Height { expr, at } => {
            let h = shifting_zero_height_tol(&read_poly::<S>(expr, ctx)?, &read_scalar(at, ctx)?, tol)?;
            Report::new(h.to_string(), json!({ "height": h }))
        }
        Command::Chains { expr } => {
            let mut c = chain_decomposition_tol(&read_factored::<S>(expr, ctx)?, tol)?;
            c.lead = c.lead.denoised(tol);
            for (start, _) in &mut c.chains {
                *start = start.denoised(tol);
            }
            let mut text = format!("lead: {}", c.lead);
            for (start, n) in &c.chains {
                let _ = write!(text, "\nstart {start}, length {n}");
            }
            Report::new(text, to_json!(&c))
        }
        Command::Rad { expr } => poly_report(&classical_rad(&read_factored::<S>(expr, ctx)?), tol),
        Command::RadDelta { expr } => poly_report(&rad_delta_tol(&read_factored::<S>(expr, ctx)?, tol)?, tol),
        Command::RadKappa { expr, kappa } => {
            poly_report(&rad_kappa_tol(&read_factored::<S>(expr, ctx)?, *kappa, tol)?, tol)
        }
        Command::RadQ { expr, q } => poly_report(&rad_delta_q_tol(&read_factored::<S>(expr, ctx)?, *q, tol)?, tol),
        Command::GcdTower { expr, n } => poly_report(&gcd_tower_tol(&read_factored::<S>(expr, ctx)?, *n, tol)?, tol),
        Command::ShiftingPrime { f, g } => {
            let d = common_shifting_divisors_tol(&read_factored::<S>(f, ctx)?, &read_factored::<S>(g, ctx)?, tol)?;
            let d: Vec<S> = d.iter().map(|w| w.denoised(tol)).collect();
            let list: Vec<String> = d.iter().map(|w| format!("z - ({w})")).collect();
            let text = if d.is_empty() {
                "shifting prime".to_string()
            } else {
                format!("not shifting prime; common shifting divisors: {}", list.join(", "))
            };
            Report::new(text, json!({ "shifting_prime": d.is_empty(), "common_divisors": d }))
        }
        Command::Casoratian { exprs, form } => {
            let fs = exprs
                .iter()
                .map(|e| read_poly::<S>(e, ctx))
                .collect::<Outcome<Vec<_>>>()?;
            let form = match form {
                Form::Delta => CasoratiForm::Delta,
                Form::Shift => CasoratiForm::Shift,
            };
            poly_report(&casoratian(&fs, form)?, tol)
        }
        Command::Mason { exprs, classical } => {
            let abc = triple(read_all::<S>(exprs, ctx)?);
            mason_report(if *classical {
                mason_classical(&abc, tol)?
            } else {
                mason_delta(&abc, tol)?
            })
        }
        Command::MasonExt { exprs } => mason_report(mason_delta_ext(&read_all::<S>(exprs, ctx)?, tol)?),
        Command::Fermat { exprs, n } => fermat_report(fermat_check(&triple(read_all::<S>(exprs, ctx)?), *n, tol)?),
        Command::FermatMulti { exprs, n, rhs_one } => {
            fermat_report(fermat_multi_check(&read_all::<S>(exprs, ctx)?, *n, *rhs_one, tol)?)
        }
        Command::Catalog { name: None } => Report::new(catalog::NAMES.join("\n"), json!({ "names": catalog::NAMES })),
        Command::Catalog { name: Some(name) } => {
            let outcome = catalog::run(name, ctx.precision)?.ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown instance '{name}'; known: {}",
                    catalog::NAMES.join(", ")
                ))
            })?;
            let text = match &outcome {
                catalog::Outcome::Mason(r) => mason_text(r),
                catalog::Outcome::Fermat(r) => fermat_text(r),
                catalog::Outcome::FermatNumeric(rs) => {
                    let sups: Vec<String> = rs.iter().map(|r| format!("{:e}", r.residual_sup)).collect();
                    format!("{} parameter roots; residual sups: {}", rs.len(), sups.join(", "))
                }
            };
            Report::new(text, to_json!(&outcome))
        }
        Command::Generate { m } => {
            let fs = gen_mason_instance(*m, ctx.seed, &RootGrid::default())?;
            let report = if let [a, b, c] = &fs[..] {
                mason_delta(&[a.clone(), b.clone(), c.clone()], tol)?
            } else {
                mason_delta_ext(&fs, tol)?
            };
            let polys: Vec<String> = fs.iter().map(|f| f.expand().to_string()).collect();
            let mut r = mason_report(report);
            r.text = format!("{}\n{}", polys.join("\n"), r.text);
            r.json = json!({ "seed": ctx.seed, "polynomials": polys, "report": r.json });
            r
        }
        Command::VerifyPaper { .. } => unreachable!("handled by the fixture runner"),
    })
}
