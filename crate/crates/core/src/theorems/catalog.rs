//! Worked instances: small polynomials whose heights, radicals and
//! identities are known in closed form.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{fermat_check, fermat_multi_check, mason_delta, mason_delta_ext, FermatReport, MasonReport};
use crate::error::Result;
use crate::poly::{factor, FactoredPoly, Poly, RootSolver};
use crate::scalar::{ExactScalar, NumericScalar, Scalar, Tolerance};

type Exact = FactoredPoly<ExactScalar>;

fn q(n: i64) -> ExactScalar {
    ExactScalar::from_integer(n)
}

fn sqrt(n: i64) -> ExactScalar {
    ExactScalar::sqrt_of_integer(&BigInt::from(n)).expect("small radicand")
}

fn int_roots(lead: i64, roots: &[(i64, usize)]) -> Exact {
    FactoredPoly::new(q(lead), roots.iter().map(|&(r, m)| (q(r), m))).expect("nonzero lead")
}

fn poly(coeffs: Vec<ExactScalar>) -> Poly<ExactScalar> {
    Poly::new(coeffs)
}

fn factored(p: Poly<ExactScalar>) -> Exact {
    factor(&p, &[]).expect("worked instances split over their field")
}

/// `z^2 (z-1)(z-2)`: two chains starting at 0.
pub fn two_chain_example() -> Exact {
    int_roots(1, &[(0, 2), (1, 1), (2, 1)])
}

/// `z^2 (z-1)^3`.
pub fn double_triple_example() -> Exact {
    int_roots(1, &[(0, 2), (1, 3)])
}

/// `(z+1) z^2 (z-1)^3 (z-2)^2 (z-4)`: four chains.
pub fn four_chain_example() -> Exact {
    int_roots(1, &[(-1, 1), (0, 2), (1, 3), (2, 2), (4, 1)])
}

/// `a = z(z-1)`, `b = -(z-4)(z-5)`, `c = 4(2z-5)`: the difference Mason
/// inequality holds with equality.
pub fn sharp_triple() -> [Exact; 3] {
    [
        int_roots(1, &[(0, 1), (1, 1)]),
        int_roots(-1, &[(4, 1), (5, 1)]),
        FactoredPoly::new(q(8), [(ExactScalar::ratio(5, 2), 1)]).expect("nonzero lead"),
    ]
}

/// `(z-α)^(5) - (z-β)^(5) + k (z-c)^(4) = f_4` with `α = c + k/10 - 1/2`,
/// `β = c - k/10 - 1/2` and the quadratic `f_4` below: a sharp case of the
/// extended inequality with `m = 3`.
pub fn sharp_quadruple(c: &BigRational, k: &BigRational) -> Result<Vec<Exact>> {
    let r = |x: &BigRational| ExactScalar::rational(x.clone());
    let tenth = BigRational::new(BigInt::from(1), BigInt::from(10));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let alpha = c + k * &tenth - &half;
    let beta = c - k * &tenth - &half;
    let run = |lead: ExactScalar, start: &BigRational, n: i64| {
        FactoredPoly::new(lead, (0..n).map(|j| (r(start).plus(&q(j)), 1)))
    };
    let f1 = run(q(1), &alpha, 5)?;
    let f2 = run(q(-1), &beta, 5)?;
    let f3 = run(r(k), c, 4)?;
    // -k(k-5)(k+5)/50000 * (1000 z^2 - (2000c + 3000) z + k^2 + 1000c^2 + 3000c + 1775)
    let n = |x: i64| BigRational::from_integer(BigInt::from(x));
    let scale = -(k * (k - n(5)) * (k + n(5))) / n(50000);
    let quad = poly(vec![
        r(&(k * k + n(1000) * c * c + n(3000) * c + n(1775))),
        r(&(-(n(2000) * c + n(3000)))),
        q(1000),
    ]);
    let f4 = factor(&quad.scale(&r(&scale)), &[])?;
    Ok(vec![f1, f2, f3, f4])
}

/// `a = z^2`, `b = -(i/2)(√2 z^2 + 2z - √2)`, `c = -(1/2)(√2 z^2 - 2z - √2)`:
/// `a^(2) + b^(2) = c^(2)`.
pub fn falling_square_triple() -> [Exact; 3] {
    let half = ExactScalar::ratio(1, 2);
    let i = ExactScalar::i();
    let b = poly(vec![sqrt(2).negated(), q(2), sqrt(2)]).scale(&half.times(&i).negated());
    let c = poly(vec![sqrt(2).negated(), q(-2), sqrt(2)]).scale(&half.negated());
    [int_roots(1, &[(0, 2)]), factored(b), factored(c)]
}

/// Linear solutions of `f_1^(2) + f_2^(2) + f_3^(2) = 1`.
pub fn linear_unit_triad() -> [Exact; 3] {
    let half = ExactScalar::ratio(1, 2);
    let i = ExactScalar::i();
    let f1 = poly(vec![q(1), half.times(&sqrt(2))]);
    let f2 = poly(vec![half.times(&sqrt(2).minus(&sqrt(6))), half.clone()]);
    let f3 = poly(vec![
        half.times(&i).times(&sqrt(6).minus(&sqrt(2))),
        half.times(&i).times(&sqrt(3)),
    ]);
    [factored(f1), factored(f2), factored(f3)]
}

/// Quadratic solutions of `f_1^(2) + f_2^(2) + f_3^(2) = 1`.
pub fn quadratic_unit_triad() -> [Exact; 3] {
    let ints = |c: &[i64]| poly(c.iter().map(|&x| q(x)).collect());
    let s1 = ExactScalar::ratio(1, 24).times(&sqrt(2).inverse().expect("nonzero"));
    let s3 = ExactScalar::i()
        .times(&ExactScalar::ratio(1, 16))
        .times(&sqrt(3).inverse().expect("nonzero"));
    [
        factored(ints(&[-29, 48, 24]).scale(&s1)),
        factored(ints(&[-61, -48, 24]).scale(&ExactScalar::ratio(1, 48))),
        factored(ints(&[3, 16, 24]).scale(&s3)),
    ]
}

/// The nine roots of `s^9 - 144 s^3 + 108`.
pub fn cubic_triad_parameters(precision: usize) -> Result<Vec<NumericScalar>> {
    let mut coeffs = vec![NumericScalar::zero(); 10];
    coeffs[0] = NumericScalar::from_i64(108).with_precision(precision);
    coeffs[3] = NumericScalar::from_i64(-144);
    coeffs[9] = NumericScalar::one();
    let p = Poly::new(coeffs);
    Ok(NumericScalar::solve(&p, Tolerance::Auto)?
        .into_iter()
        .map(|(s, _)| s)
        .collect())
}

/// Cubic solutions of `f_1^(3) + f_2^(3) + f_3^(3) = 1`, parametrized by a
/// root `s` of `s^9 - 144 s^3 + 108` and any `t != 0`.
pub fn cubic_unit_triad(s: &NumericScalar, t: &NumericScalar) -> Result<[FactoredPoly<NumericScalar>; 3]> {
    let n = |x: i64| NumericScalar::from_i64(x);
    let s2 = s.times(s);
    let s3 = s2.times(s);
    let t2 = t.times(t);
    let t3 = t2.times(t);
    let a2 = n(-3).times(t).divided(&n(2).times(s))?;
    let a1 = n(3).times(&n(4).times(&s2).minus(&t2)).divided(&n(4).times(&s2))?;
    let a0 = n(3)
        .times(&t3)
        .minus(&n(36).times(&s2).times(t))
        .minus(&n(4).times(&s3).times(&s3))
        .divided(&n(24).times(&s3))?;
    let f1 = Poly::new(vec![a0.clone(), a1.negated(), a2.negated(), n(1)]);
    let f2 = Poly::new(vec![n(3).times(&a0).plus(&s3).divided(&n(3))?.negated(), a1, a2, n(-1)]);
    let f3 = Poly::new(vec![
        t2.minus(&n(4).times(&s2)).divided(&n(4).times(s))?,
        t.clone(),
        s.clone(),
    ]);
    Ok([factor(&f1, &[])?, factor(&f2, &[])?, factor(&f3, &[])?])
}

/// Names accepted by [`run`].
pub const NAMES: &[&str] = &[
    "cubic-unit-triad",
    "falling-square-triple",
    "linear-unit-triad",
    "quadratic-unit-triad",
    "sharp-quadruple",
    "sharp-triple",
];

/// Result of running a worked instance through its checker.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Mason(MasonReport),
    Fermat(FermatReport<ExactScalar>),
    /// One report per parameter root.
    FermatNumeric(Vec<FermatReport<NumericScalar>>),
}

/// Runs a named worked instance; `precision` only affects numeric ones.
pub fn run(name: &str, precision: usize) -> Result<Option<Outcome>> {
    let tol = Tolerance::Auto;
    Ok(Some(match name {
        "sharp-triple" => Outcome::Mason(mason_delta(&sharp_triple(), tol)?),
        "sharp-quadruple" => {
            let zero = BigRational::from_integer(BigInt::from(0));
            let one = BigRational::from_integer(BigInt::from(1));
            Outcome::Mason(mason_delta_ext(&sharp_quadruple(&zero, &one)?, tol)?)
        }
        "falling-square-triple" => Outcome::Fermat(fermat_check(&falling_square_triple(), 2, tol)?),
        "linear-unit-triad" => Outcome::Fermat(fermat_multi_check(&linear_unit_triad(), 2, true, tol)?),
        "quadratic-unit-triad" => Outcome::Fermat(fermat_multi_check(&quadratic_unit_triad(), 2, true, tol)?),
        "cubic-unit-triad" => {
            let t = NumericScalar::one();
            let mut reports = Vec::new();
            for s in cubic_triad_parameters(precision)? {
                let fs = cubic_unit_triad(&s, &t)?;
                reports.push(fermat_multi_check(&fs, 3, true, tol)?);
            }
            Outcome::FermatNumeric(reports)
        }
        _ => return Ok(None),
    }))
}
