use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use super::{all_hold, is_negligible, labels, not_all_constant, pairwise_hypothesis, residual, Hypothesis};
use crate::casorati::linearly_independent;
use crate::error::{Error, Result};
use crate::poly::{FactoredPoly, Poly};
use crate::scalar::{Scalar, Tolerance};

/// Verdict of a Fermat-type check in falling factorial powers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FermatReport<S: Scalar> {
    /// The equation checked, e.g. `a^(2) + b^(2) = c^(2)`.
    pub equation: String,
    pub identity_holds: bool,
    /// Left side minus right side, expanded.
    pub residual: Poly<S>,
    pub residual_sup: f64,
    pub n: usize,
    pub m: usize,
    /// Largest exponent allowed by the theorem, as an exact rational.
    #[serde(serialize_with = "rational_text")]
    pub bound: BigRational,
    pub within_bound: bool,
    pub hypotheses: Vec<Hypothesis>,
    /// Identity and hypotheses hold but `n` exceeds the bound.
    pub counterexample: bool,
}

fn rational_text<Ser: Serializer>(q: &BigRational, s: Ser) -> Result<Ser::Ok, Ser::Error> {
    s.collect_str(&format_args!("{}/{}", q.numer(), q.denom()))
}

impl<S: Scalar> FermatReport<S> {
    pub fn hypotheses_hold(&self) -> bool {
        all_hold(&self.hypotheses)
    }

    fn new(
        equation: String,
        residual: Poly<S>,
        tol: Tolerance,
        n: usize,
        m: usize,
        bound: BigRational,
        hypotheses: Vec<Hypothesis>,
    ) -> Self {
        let identity_holds = is_negligible(&residual, tol);
        let within_bound = BigRational::from_integer(BigInt::from(n)) <= bound;
        let counterexample = identity_holds && all_hold(&hypotheses) && !within_bound;
        Self {
            equation,
            identity_holds,
            residual_sup: residual.coeff_sup(),
            residual,
            n,
            m,
            bound,
            within_bound,
            hypotheses,
            counterexample,
        }
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn check_exponent(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("exponent must be positive".into()));
    }
    Ok(())
}

/// `a^(n) + b^(n) = c^(n)` in falling powers. The bound is `n <= 2`, or
/// `n <= 1` when one of `a, b, c` is constant. Shifting primality of the
/// falling powers is reported pair by pair.
pub fn fermat_check<S: Scalar>(abc: &[FactoredPoly<S>; 3], n: usize, tol: Tolerance) -> Result<FermatReport<S>> {
    check_exponent(n)?;
    let names = ["a", "b", "c"].map(String::from).to_vec();
    let powers: Vec<FactoredPoly<S>> = abc.iter().map(|f| f.falling_power(n)).collect();
    let power_names: Vec<String> = names.iter().map(|x| format!("{x}^({n})")).collect();
    let mut hypotheses = vec![not_all_constant(abc, &names)];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let pair = [powers[i].clone(), powers[j].clone()];
        let pair_names = [power_names[i].clone(), power_names[j].clone()];
        hypotheses.push(pairwise_hypothesis(
            &format!("shifting prime ({}, {})", pair_names[0], pair_names[1]),
            &pair,
            &pair_names,
            tol,
        )?);
    }
    let bound = if abc.iter().any(FactoredPoly::is_constant) {
        1
    } else {
        2
    };
    let expanded: Vec<Poly<S>> = powers.iter().map(FactoredPoly::expand).collect();
    Ok(FermatReport::new(
        format!("{} + {} = {}", power_names[0], power_names[1], power_names[2]),
        residual(&expanded[..2], &expanded[2]),
        tol,
        n,
        2,
        int(bound),
        hypotheses,
    ))
}

/// `f_1^(n) + ... + f_m^(n) = f_(m+1)^(n)`, or `= 1` with `rhs_one`
/// (then `fs` holds only the `m` summands).
///
/// Bound: `m^2 - 1 - m(m-1) / (2 max deg f_i)`, or `m^2 - m - 1` for the
/// unit right-hand side.
pub fn fermat_multi_check<S: Scalar>(
    fs: &[FactoredPoly<S>],
    n: usize,
    rhs_one: bool,
    tol: Tolerance,
) -> Result<FermatReport<S>> {
    check_exponent(n)?;
    let m = if rhs_one { fs.len() } else { fs.len().saturating_sub(1) };
    if m < 2 {
        return Err(Error::InvalidArgument(format!("need m >= 2 summands, got {m}")));
    }
    let names = labels("f", fs.len());
    let powers: Vec<FactoredPoly<S>> = fs.iter().map(|f| f.falling_power(n)).collect();
    let power_names: Vec<String> = names.iter().map(|x| format!("{x}^({n})")).collect();
    let expanded: Vec<Poly<S>> = powers.iter().map(FactoredPoly::expand).collect();

    let constants: Vec<&str> = fs
        .iter()
        .zip(&names)
        .filter(|(f, _)| f.is_constant())
        .map(|(_, x)| x.as_str())
        .collect();
    let mut hypotheses = vec![Hypothesis::new(
        "nonconstant",
        constants.is_empty(),
        if constants.is_empty() {
            "every polynomial is nonconstant".to_string()
        } else {
            format!("constant: {}", constants.join(", "))
        },
    )];
    hypotheses.push(pairwise_hypothesis(
        "pairwise shifting prime (falling powers)",
        &powers,
        &power_names,
        tol,
    )?);
    let independent = linearly_independent(&expanded[..m], tol)?;
    hypotheses.push(Hypothesis::new(
        "linearly independent",
        independent,
        format!(
            "casoratian of {}..{} is {}",
            power_names[0],
            power_names[m - 1],
            if independent { "nonzero" } else { "zero" }
        ),
    ));

    let mi = m as i64;
    let (rhs, rhs_text, bound) = if rhs_one {
        (Poly::one(), "1".to_string(), int(mi * mi - mi - 1))
    } else {
        let max_deg = fs.iter().map(FactoredPoly::degree).max().unwrap_or(0).max(1) as i64;
        let bound = int(mi * mi - 1) - BigRational::new(BigInt::from(mi * (mi - 1)), BigInt::from(2 * max_deg));
        (expanded[m].clone(), power_names[m].clone(), bound)
    };
    Ok(FermatReport::new(
        format!("{} = {rhs_text}", power_names[..m].join(" + ")),
        residual(&expanded[..m], &rhs),
        tol,
        n,
        m,
        bound,
        hypotheses,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;

    fn q(n: i64) -> ExactScalar {
        ExactScalar::from_integer(n)
    }

    fn constant(c: i64) -> FactoredPoly<ExactScalar> {
        FactoredPoly::constant(q(c)).unwrap()
    }

    #[test]
    fn constants_and_linear() {
        let r = fermat_check(&[constant(3), constant(4), constant(7)], 1, Tolerance::Auto).unwrap();
        assert!(r.identity_holds);
        assert_eq!(r.bound, int(1));
        assert!(!r.hypotheses_hold());
        let z = FactoredPoly::new(q(1), [(q(0), 1)]).unwrap();
        let z1 = FactoredPoly::new(q(1), [(q(-1), 1)]).unwrap();
        let r = fermat_check(&[z, constant(1), z1], 1, Tolerance::Auto).unwrap();
        assert!(r.identity_holds && r.within_bound);
        assert_eq!(r.bound, int(1));
        assert!(fermat_check(&[constant(1), constant(1), constant(2)], 0, Tolerance::Auto).is_err());
    }

    #[test]
    fn multi_bounds() {
        let z = |r: i64| FactoredPoly::new(q(1), [(q(r), 1)]).unwrap();
        let r = fermat_multi_check(&[z(0), z(3), z(10)], 1, true, Tolerance::Auto).unwrap();
        assert_eq!((r.m, r.bound.clone()), (3, int(5)));
        assert!(!r.identity_holds);
        let r = fermat_multi_check(&[z(0), z(3), z(10), z(20)], 1, false, Tolerance::Auto).unwrap();
        // 3^2 - 1 - 6/2
        assert_eq!(r.bound, int(5));
        assert!(fermat_multi_check(&[z(0)], 1, true, Tolerance::Auto).is_err());
    }
}
