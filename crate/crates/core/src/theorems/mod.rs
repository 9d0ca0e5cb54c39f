//! Checkers for the classical and difference Mason-type inequalities and
//! for Fermat-type equations in falling factorial powers.
//!
//! Checkers never abort on a failed hypothesis: they return a full report
//! whose flags explain why a statement does or does not apply. A negative
//! slack with every hypothesis satisfied is flagged as a counterexample.

pub mod catalog;
mod fermat;
mod generate;
mod mason;

pub use fermat::{fermat_check, fermat_multi_check, FermatReport};
pub use generate::{gen_mason_instance, RootGrid};
pub use mason::{mason_classical, mason_delta, mason_delta_ext, MasonKind, MasonReport};

use serde::Serialize;

use crate::error::Result;
use crate::poly::{FactoredPoly, Poly};
use crate::scalar::{Scalar, Tolerance};
use crate::shiftcalc::pairwise_shifting_prime;

/// One named hypothesis and the evidence for its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub witness: String,
}

impl Hypothesis {
    fn new(name: impl Into<String>, holds: bool, witness: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            holds,
            witness: witness.into(),
        }
    }
}

fn all_hold(hs: &[Hypothesis]) -> bool {
    hs.iter().all(|h| h.holds)
}

fn not_all_constant<S: Scalar>(fs: &[FactoredPoly<S>], names: &[String]) -> Hypothesis {
    let nonconstant: Vec<&str> = fs
        .iter()
        .zip(names)
        .filter(|(f, _)| !f.is_constant())
        .map(|(_, n)| n.as_str())
        .collect();
    let witness = if nonconstant.is_empty() {
        "every polynomial is constant".to_string()
    } else {
        format!("nonconstant: {}", nonconstant.join(", "))
    };
    Hypothesis::new("not all constant", !nonconstant.is_empty(), witness)
}

fn pairwise_hypothesis<S: Scalar>(
    name: &str,
    fs: &[FactoredPoly<S>],
    names: &[String],
    tol: Tolerance,
) -> Result<Hypothesis> {
    Ok(match pairwise_shifting_prime(fs, tol)? {
        None => Hypothesis::new(name, true, "no common shifting divisor"),
        Some(w) => Hypothesis::new(
            name,
            false,
            format!(
                "{} and {} share the shifting divisor z - ({})",
                names[w.left], names[w.right], w.divisor
            ),
        ),
    })
}

/// Expanded `sum(lhs) - rhs`.
fn residual<S: Scalar>(lhs: &[Poly<S>], rhs: &Poly<S>) -> Poly<S> {
    &lhs.iter().fold(Poly::zero(), |acc, p| &acc + p) - rhs
}

fn is_negligible<S: Scalar>(p: &Poly<S>, tol: Tolerance) -> bool {
    p.coeffs().iter().all(|c| c.near_zero(tol))
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
