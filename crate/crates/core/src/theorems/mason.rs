use serde::Serialize;

use super::{all_hold, is_negligible, labels, not_all_constant, pairwise_hypothesis, residual, Hypothesis};
use crate::casorati::linearly_independent;
use crate::error::{Error, Result};
use crate::poly::{classical_rad, FactoredPoly, Poly};
use crate::scalar::{Scalar, Tolerance};
use crate::shiftcalc::{rad_delta_q_tol, rad_delta_tol, rad_kappa_tol};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MasonKind {
    /// `max deg <= deg rad(abc) - 1` for coprime `a + b = c`.
    Classical,
    /// `max deg <= deg rad_Δ(abc) - 1` for shifting prime `a + b = c`.
    Difference,
    /// `max deg <= deg rad_Δ^(m-1)(f_1...f_(m+1)) - m(m-1)/2`.
    DifferenceExtended,
}

/// Verdict of a Mason-type check. `slack = rhs - lhs`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MasonReport {
    pub theorem: MasonKind,
    pub equation_holds: bool,
    pub residual_sup: f64,
    pub hypotheses: Vec<Hypothesis>,
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    pub sharp: bool,
    /// `None` when the equation or a hypothesis fails.
    pub inequality_holds: Option<bool>,
    pub counterexample: bool,
    /// `deg rad_1(abc) - 1` computed from the kappa radical (difference case).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_kappa: Option<i64>,
    /// `(m-1) deg rad_Δ(prod) - m(m-1)/2` (extended case).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs2: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack2: Option<i64>,
}

impl MasonReport {
    pub fn hypotheses_hold(&self) -> bool {
        all_hold(&self.hypotheses)
    }

    fn assemble(theorem: MasonKind, equation: (bool, f64), hypotheses: Vec<Hypothesis>, lhs: i64, rhs: i64) -> Self {
        let slack = rhs - lhs;
        let applies = equation.0 && all_hold(&hypotheses);
        let inequality_holds = applies.then_some(slack >= 0);
        Self {
            theorem,
            equation_holds: equation.0,
            residual_sup: equation.1,
            hypotheses,
            lhs,
            rhs,
            slack,
            sharp: slack == 0,
            inequality_holds,
            counterexample: inequality_holds == Some(false),
            rhs_kappa: None,
            rhs2: None,
            slack2: None,
        }
    }
}

fn degree<S: Scalar>(p: &Poly<S>) -> i64 {
    p.deg().map_or(0, |d| d as i64)
}

fn max_degree<S: Scalar>(fs: &[FactoredPoly<S>]) -> i64 {
    fs.iter().map(|f| f.degree() as i64).max().unwrap_or(0)
}

/// Checks `sum(fs[..k]) = fs[k]`.
fn sum_equation<S: Scalar>(fs: &[FactoredPoly<S>], tol: Tolerance) -> (bool, f64) {
    let expanded: Vec<Poly<S>> = fs.iter().map(FactoredPoly::expand).collect();
    let (last, init) = expanded.split_last().expect("nonempty");
    let r = residual(init, last);
    (is_negligible(&r, tol), r.coeff_sup())
}

fn abc_names() -> Vec<String> {
    ["a", "b", "c"].map(String::from).to_vec()
}

/// Classical Mason: `a + b = c` with `a, b, c` pairwise coprime.
pub fn mason_classical<S: Scalar>(abc: &[FactoredPoly<S>; 3], tol: Tolerance) -> Result<MasonReport> {
    let names = abc_names();
    let expanded: Vec<Poly<S>> = abc.iter().map(FactoredPoly::expand).collect();
    let mut coprime = Hypothesis::new("relatively prime", true, "pairwise gcd is 1");
    'pairs: for i in 0..3 {
        for j in i + 1..3 {
            let g = expanded[i].gcd_tol(&expanded[j], tol)?;
            if !g.is_constant() {
                coprime = Hypothesis::new(
                    "relatively prime",
                    false,
                    format!("gcd({}, {}) = {g}", names[i], names[j]),
                );
                break 'pairs;
            }
        }
    }
    let hypotheses = vec![coprime, not_all_constant(abc, &names)];
    let product = FactoredPoly::product(abc);
    let rhs = degree(&classical_rad(&product)) - 1;
    Ok(MasonReport::assemble(
        MasonKind::Classical,
        sum_equation(abc, tol),
        hypotheses,
        max_degree(abc),
        rhs,
    ))
}

/// Difference Mason: `a + b = c`, pairwise shifting prime, not all
/// constant. The right side is computed from both `rad_Δ` and the kappa
/// radical with `kappa = 1`; their degrees must agree.
pub fn mason_delta<S: Scalar>(abc: &[FactoredPoly<S>; 3], tol: Tolerance) -> Result<MasonReport> {
    let names = abc_names();
    let hypotheses = vec![
        pairwise_hypothesis("pairwise shifting prime", abc, &names, tol)?,
        not_all_constant(abc, &names),
    ];
    let product = FactoredPoly::product(abc);
    let rhs = degree(&rad_delta_tol(&product, tol)?) - 1;
    let rhs_kappa = degree(&rad_kappa_tol(&product, 1, tol)?) - 1;
    if rhs != rhs_kappa {
        return Err(Error::CrossCheck(format!(
            "deg rad_Δ(abc) - 1 = {rhs} but deg rad_1(abc) - 1 = {rhs_kappa}"
        )));
    }
    let mut report = MasonReport::assemble(
        MasonKind::Difference,
        sum_equation(abc, tol),
        hypotheses,
        max_degree(abc),
        rhs,
    );
    report.rhs_kappa = Some(rhs_kappa);
    Ok(report)
}

/// Extended difference Mason for `f_1 + ... + f_m = f_(m+1)`, `m >= 2`.
///
/// Reports both `rhs = deg rad_Δ^(m-1)(prod) - m(m-1)/2` and the weaker
/// `rhs2 = (m-1) deg rad_Δ(prod) - m(m-1)/2`, checking `rhs <= rhs2`.
pub fn mason_delta_ext<S: Scalar>(fs: &[FactoredPoly<S>], tol: Tolerance) -> Result<MasonReport> {
    if fs.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "need at least 3 polynomials (m >= 2), got {}",
            fs.len()
        )));
    }
    let m = fs.len() - 1;
    let names = labels("f", fs.len());
    let (min_idx, min_deg) = fs
        .iter()
        .map(FactoredPoly::degree)
        .enumerate()
        .min_by_key(|&(_, d)| d)
        .expect("nonempty");
    let summands: Vec<Poly<S>> = fs[..m].iter().map(FactoredPoly::expand).collect();
    let independent = linearly_independent(&summands, tol)?;
    let hypotheses = vec![
        pairwise_hypothesis("pairwise shifting prime", fs, &names, tol)?,
        Hypothesis::new(
            format!("minimum degree >= {}", m - 1),
            min_deg + 1 >= m,
            format!("smallest degree {min_deg} ({})", names[min_idx]),
        ),
        Hypothesis::new(
            "linearly independent",
            independent,
            if independent {
                format!("casoratian of f1..f{m} is nonzero")
            } else {
                format!("casoratian of f1..f{m} vanishes")
            },
        ),
    ];
    let product = FactoredPoly::product(fs);
    let correction = (m * (m - 1) / 2) as i64;
    let rhs = degree(&rad_delta_q_tol(&product, m - 1, tol)?) - correction;
    let rhs2 = (m as i64 - 1) * degree(&rad_delta_tol(&product, tol)?) - correction;
    if rhs > rhs2 {
        return Err(Error::CrossCheck(format!(
            "truncated radical bound {rhs} exceeds {rhs2}"
        )));
    }
    let lhs = max_degree(fs);
    let mut report = MasonReport::assemble(
        MasonKind::DifferenceExtended,
        sum_equation(fs, tol),
        hypotheses,
        lhs,
        rhs,
    );
    report.rhs2 = Some(rhs2);
    report.slack2 = Some(rhs2 - lhs);
    Ok(report)
}
