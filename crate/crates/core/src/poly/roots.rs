//! Root finding: `Poly -> FactoredPoly`.
//!
//! The exact backend is deliberately partial. It verifies caller-supplied
//! roots, splits off rational roots and solves what is left when that is at
//! most quadratic. The numeric backend runs Aberth's simultaneous iteration
//! and merges clusters of approximate roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_prime::nt_funcs::factorize128;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::{FactoredPoly, Poly};
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, NumericScalar, Scalar, Tolerance};

/// Backends that can locate polynomial roots.
pub trait RootSolver: Scalar {
    /// Roots with multiplicities of a polynomial of degree at least one.
    fn solve(p: &Poly<Self>, tol: Tolerance) -> Result<Vec<(Self, usize)>>;

    /// Embeds an exact value (used for parsed input).
    fn embed(x: &ExactScalar, precision: usize) -> Self;
}

/// Factors `p` with the default tolerance.
pub fn factor<S: RootSolver>(p: &Poly<S>, hint: &[S]) -> Result<FactoredPoly<S>> {
    factor_with(p, hint, Tolerance::Auto)
}

/// Factors `p`, first dividing out every hinted root as often as it divides.
///
/// A hint that is not a root is an error.
pub fn factor_with<S: RootSolver>(p: &Poly<S>, hint: &[S], tol: Tolerance) -> Result<FactoredPoly<S>> {
    let lead = p
        .lead()
        .ok_or(Error::InvalidArgument("cannot factor the zero polynomial".into()))?
        .clone();
    let mut rest = p.clone();
    let mut roots = Vec::new();
    for h in hint {
        let mut mult = 0;
        while rest.deg().is_some_and(|d| d >= 1) {
            match rest.div_exact_tol(&Poly::linear(h), tol) {
                Ok(q) => {
                    rest = q;
                    mult += 1;
                }
                Err(_) => break,
            }
        }
        if mult == 0 && !roots.iter().any(|(r, _): &(S, usize)| r == h) {
            return Err(Error::NotAZero { point: h.to_string() });
        }
        roots.push((h.clone(), mult));
    }
    if rest.deg().is_some_and(|d| d >= 1) {
        roots.extend(S::solve(&rest, tol)?);
    }
    FactoredPoly::new(lead, roots)
}

impl RootSolver for ExactScalar {
    fn solve(p: &Poly<Self>, _tol: Tolerance) -> Result<Vec<(Self, usize)>> {
        let mut out = Vec::new();
        for (mult, part) in square_free_decomposition(p)? {
            for r in squarefree_roots(&part)? {
                out.push((r, mult));
            }
        }
        Ok(out)
    }

    fn embed(x: &ExactScalar, _precision: usize) -> Self {
        x.clone()
    }
}

/// Yun's algorithm: `p = lead * prod part_i^i` with squarefree, pairwise
/// coprime monic parts. Returns the nonconstant parts with their exponents.
fn square_free_decomposition<S: Scalar>(p: &Poly<S>) -> Result<Vec<(usize, Poly<S>)>> {
    let dp = p.derivative();
    let a0 = p.gcd(&dp)?;
    let mut b = p.div_exact(&a0)?.monic()?;
    let mut d = &dp.div_exact(&a0)?.scale(&p.lead().expect("nonzero").inverse()?) - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg().is_some_and(|n| n >= 1) {
        let a = b.gcd(&d)?;
        let next_b = b.div_exact(&a)?;
        let c = d.div_exact(&a)?;
        d = &c - &next_b.derivative();
        if a.deg().is_some_and(|n| n >= 1) {
            out.push((i, a));
        }
        b = next_b;
        i += 1;
    }
    Ok(out)
}

/// Roots of a squarefree polynomial: zero, rational roots, then a linear or
/// quadratic remainder.
fn squarefree_roots(p: &Poly<ExactScalar>) -> Result<Vec<ExactScalar>> {
    let mut roots = Vec::new();
    let mut rest = p.clone();
    if rest.coeff(0).is_zero() {
        roots.push(ExactScalar::zero());
        rest = rest.div_exact(&Poly::z())?;
    }
    if rest.deg().is_some_and(|d| d >= 3) {
        for r in rational_roots(&rest) {
            rest = rest.div_exact(&Poly::linear(&r))?;
            roots.push(r);
        }
    }
    match rest.deg() {
        Some(0) => {}
        Some(1) => roots.push(rest.coeff(0).negated().divided(&rest.coeff(1))?),
        Some(2) => roots.extend(quadratic_roots(&rest).ok_or_else(|| unavailable(&rest))?),
        _ => return Err(unavailable(&rest)),
    }
    Ok(roots)
}

fn unavailable<S: Scalar>(p: &Poly<S>) -> Error {
    Error::RootsUnavailable {
        degree: p.deg().unwrap_or(0),
        poly: p.to_string(),
    }
}

fn quadratic_roots<S: Scalar>(p: &Poly<S>) -> Option<[S; 2]> {
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let disc = b.times(&b).minus(&S::from_i64(4).times(&a).times(&c));
    let root = disc.sqrt()?;
    let two_a = S::from_i64(2).times(&a);
    let neg_b = b.negated();
    Some([
        neg_b.plus(&root).divided(&two_a).ok()?,
        neg_b.minus(&root).divided(&two_a).ok()?,
    ])
}

/// Cap on the number of rational candidates tried.
const MAX_CANDIDATES: usize = 1 << 16;

/// Distinct rational roots of a polynomial with rational coefficients and
/// nonzero constant term; empty when coefficients are irrational or too
/// large to enumerate divisors.
fn rational_roots(p: &Poly<ExactScalar>) -> Vec<ExactScalar> {
    let Some(qs) = p.coeffs().iter().map(Scalar::as_rational).collect::<Option<Vec<_>>>() else {
        return Vec::new();
    };
    let den = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * &den).to_integer()).collect();
    let (Some(c0), Some(cn)) = (divisors(&ints[0]), divisors(ints.last().expect("nonzero"))) else {
        return Vec::new();
    };
    if c0.len().saturating_mul(cn.len()) > MAX_CANDIDATES {
        return Vec::new();
    }
    let mut found: Vec<ExactScalar> = Vec::new();
    for num in &c0 {
        for d in &cn {
            for sign in [1, -1] {
                let cand = ExactScalar::rational(BigRational::new(num * sign, d.clone()));
                if !found.contains(&cand) && p.eval(&cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    found
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u128()?;
    let mut out = vec![BigInt::one()];
    for (p, e) in factorize128(n) {
        let mut next = Vec::with_capacity(out.len() * (e + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        out = next;
    }
    Some(out)
}

/// Iteration cap for Aberth's method.
const MAX_ITERATIONS: usize = 1000;
/// Extra working bits beyond the input precision.
const GUARD_BITS: usize = 32;

impl RootSolver for NumericScalar {
    fn solve(p: &Poly<Self>, tol: Tolerance) -> Result<Vec<(Self, usize)>> {
        let precision = p.coeffs().iter().map(NumericScalar::precision).max().unwrap_or(64);
        let work = precision + GUARD_BITS;
        let approx = aberth(p, work)?;
        Ok(cluster(approx, tol, precision)
            .into_iter()
            .map(|(c, m)| (polish(p, c, m, work).with_precision(precision), m))
            .collect())
    }

    fn embed(x: &ExactScalar, precision: usize) -> Self {
        NumericScalar::from_exact(x, precision)
    }
}

/// Rounding noise of evaluating `p` at a point of modulus `r` with
/// `work` bits: `2^(8-work) * n * sum |a_k| r^k`.
fn evaluation_noise(abs_coeffs: &[f64], r: f64, work: usize) -> f64 {
    let horner = abs_coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a);
    horner * abs_coeffs.len() as f64 * 2f64.powi(8 - work as i32)
}

fn aberth(p: &Poly<NumericScalar>, work: usize) -> Result<Vec<NumericScalar>> {
    let p = p.map(|c| c.with_precision(work)).monic()?;
    let dp = p.derivative();
    let n = p.deg().expect("nonconstant");
    let abs_coeffs: Vec<f64> = p.coeffs().iter().map(Scalar::abs_f64).collect();
    // Roots lie in the disc of radius 1 + max |a_k| for monic p.
    let radius = 1.0 + abs_coeffs[..n].iter().copied().fold(0.0, f64::max);
    let mut z: Vec<NumericScalar> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            NumericScalar::from_f64(radius * theta.cos(), radius * theta.sin(), work)
        })
        .collect();
    // A root is final once p(z) is indistinguishable from rounding noise;
    // repeated roots reach that floor long before their steps vanish.
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        for k in 0..n {
            if done[k] {
                continue;
            }
            let value = p.eval(&z[k]);
            if value.abs() <= evaluation_noise(&abs_coeffs, z[k].abs(), work) {
                done[k] = true;
                continue;
            }
            let Ok(ratio) = value.divided(&dp.eval(&z[k])) else {
                continue;
            };
            let mut repulsion = NumericScalar::zero();
            for j in (0..n).filter(|&j| j != k) {
                if let Ok(inv) = z[k].minus(&z[j]).inverse() {
                    repulsion = repulsion.plus(&inv);
                }
            }
            let denom = NumericScalar::one().minus(&ratio.times(&repulsion));
            let step = ratio.divided(&denom).unwrap_or(ratio);
            z[k] = z[k].minus(&step);
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    Ok(z)
}

/// Newton steps on `p^(m-1)`, where an `m`-fold root of `p` is simple;
/// sharpens a cluster centroid back to full precision.
fn polish(p: &Poly<NumericScalar>, c: NumericScalar, m: usize, work: usize) -> NumericScalar {
    if m == 1 {
        return c;
    }
    let p = p.map(|x| x.with_precision(work));
    let g = (1..m).fold(p, |acc, _| acc.derivative());
    let dg = g.derivative();
    let mut z = c.with_precision(work);
    let eps = 2f64.powi(8 - work as i32);
    for _ in 0..50 {
        let Ok(step) = g.eval(&z).divided(&dg.eval(&z)) else {
            break;
        };
        z = z.minus(&step);
        if step.abs() <= eps * (1.0 + z.abs()) {
            break;
        }
    }
    // A step that wandered off means the cluster was not a true m-fold root.
    if z.minus(&c).abs() > multiplicity_radius(work - GUARD_BITS, m, c.abs()) {
        return c;
    }
    z
}

/// Spread of `m` approximations to an `m`-fold root: rounding at relative
/// size `2^(-bits)` moves them by about `2^(-bits/m)`.
fn multiplicity_radius(bits: usize, m: usize, scale: f64) -> f64 {
    2f64.powf(-(bits as f64 - 24.0) / m as f64) * (1.0 + scale)
}

/// Groups approximate roots into clusters; the centroid becomes the root
/// and the cluster size its multiplicity.
///
/// With an absolute tolerance, approximations within it are merged. With
/// [`Tolerance::Auto`], approximations are linked at the spread a root of
/// the highest possible multiplicity would show, and a linked group of
/// size `m` is kept only if it fits the spread expected for multiplicity
/// `m`; otherwise its members stay separate roots.
fn cluster(approx: Vec<NumericScalar>, tol: Tolerance, precision: usize) -> Vec<(NumericScalar, usize)> {
    let n = approx.len();
    let close = |a: &NumericScalar, b: &NumericScalar, m: usize| match tol {
        Tolerance::Abs(t) => a.minus(b).abs() <= t,
        Tolerance::Auto => a.minus(b).abs() <= multiplicity_radius(precision, m, a.abs()),
    };
    // Single linkage at the loosest radius.
    let mut group: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            if close(&approx[i], &approx[j], n) {
                let (gi, gj) = (group[i], group[j]);
                for g in group.iter_mut().filter(|g| **g == gi) {
                    *g = gj;
                }
            }
        }
    }
    let mut clusters: Vec<Vec<NumericScalar>> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for i in 0..n {
        if seen.contains(&group[i]) {
            continue;
        }
        seen.push(group[i]);
        let members: Vec<NumericScalar> = (0..n)
            .filter(|&j| group[j] == group[i])
            .map(|j| approx[j].clone())
            .collect();
        let m = members.len();
        let consistent = members.iter().all(|a| members.iter().all(|b| close(a, b, m)));
        if consistent {
            clusters.push(members);
        } else {
            clusters.extend(members.into_iter().map(|r| vec![r]));
        }
    }
    clusters
        .into_iter()
        .map(|c| {
            let m = c.len();
            let sum = c.iter().fold(NumericScalar::zero(), |acc, r| acc.plus(r));
            let centroid = sum
                .divided(&NumericScalar::from_bigint(&BigInt::from(m)))
                .expect("nonzero count")
                .with_precision(precision);
            (centroid, m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Poly<ExactScalar> {
        Poly::new(c.iter().map(|&x| ExactScalar::from_integer(x)).collect())
    }

    fn root2() -> ExactScalar {
        ExactScalar::sqrt_of_integer(&2.into()).unwrap()
    }

    #[test]
    fn expand_after_factor_is_identity() {
        let p = ints(&[0, 0, 2, -3, 1]);
        let f = factor(&p, &[]).unwrap();
        assert_eq!(f.expand(), p);
        assert_eq!(f.order_at(&ExactScalar::zero()), 2);
        assert_eq!(f.order_at(&ExactScalar::from_integer(2)), 1);
    }

    #[test]
    fn quadratic_over_extension() {
        let f = factor(&ints(&[-2, 0, 1]), &[]).unwrap();
        let r = root2();
        assert_eq!(f.order_at(&r), 1);
        assert_eq!(f.order_at(&r.negated()), 1);
    }

    #[test]
    fn rational_roots_of_a_cubic() {
        // (2z - 1)(z + 3)(z - 4)^2
        let p = &(&ints(&[-1, 2]) * &ints(&[3, 1])) * &ints(&[-4, 1]).pow(2);
        let f = factor(&p, &[]).unwrap();
        assert_eq!(f.order_at(&ExactScalar::ratio(1, 2)), 1);
        assert_eq!(f.order_at(&ExactScalar::from_integer(4)), 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn hints_and_failures() {
        // z^3 - 2 has no rational or quadratic split
        let p = ints(&[-2, 0, 0, 1]);
        assert!(matches!(
            factor(&p, &[]),
            Err(Error::RootsUnavailable { degree: 3, .. })
        ));
        let q = ints(&[-2, 0, 1]);
        let f = factor(&q, &[root2()]).unwrap();
        assert_eq!(f.expand(), q);
        assert!(matches!(factor(&q, &[ExactScalar::one()]), Err(Error::NotAZero { .. })));
    }

    #[test]
    fn numeric_cluster_and_simple_roots() {
        let p = ints(&[0, 0, 2, -3, 1]).map(|c| NumericScalar::from_exact(c, 128));
        let f = factor(&p, &[]).unwrap();
        assert_eq!(f.degree(), 4);
        let zero = f.roots().iter().find(|(r, _)| r.abs() < 1e-10).unwrap();
        assert_eq!(zero.1, 2);
        let back = f.expand();
        assert!((&back - &p).coeff_sup() < 1e-30);
    }
}
