//! Shifting zeros and the difference radicals built from them.
//!
//! Roots whose differences are integers form a *shift class*. Inside a class
//! the zeros split greedily into runs of consecutive offsets ("chains"),
//! giving the unique decomposition `P = A * prod (z - z_j)^(n_j falling)`.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::diffcalc::delta;
use crate::error::{Error, Result};
use crate::poly::{FactoredPoly, Poly};
use crate::scalar::{IntegerTest, Scalar, Tolerance};

/// Roots of one polynomial that differ pairwise by integers.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftClass<S> {
    /// The member with the smallest offset.
    pub representative: S,
    /// Offset from the representative to multiplicity.
    pub members: BTreeMap<i64, usize>,
}

/// Shift classes spanning several polynomials at once: every offset carries
/// one multiplicity per input polynomial.
#[derive(Clone, Debug)]
struct Grid<S> {
    values: BTreeMap<i64, S>,
    counts: BTreeMap<i64, Vec<usize>>,
}

impl<S: Scalar> Grid<S> {
    fn count(&self, offset: i64, which: usize) -> usize {
        self.counts.get(&offset).map_or(0, |c| c[which])
    }

    fn representative(&self) -> &S {
        self.values.values().next().expect("nonempty class")
    }

    /// Greedy chains of input `which`: repeatedly start at the smallest
    /// offset with remaining multiplicity and run through consecutive ones.
    fn chains(&self, which: usize) -> Vec<(S, usize)> {
        let mut rem: BTreeMap<i64, usize> = self
            .counts
            .iter()
            .filter(|(_, c)| c[which] > 0)
            .map(|(&k, c)| (k, c[which]))
            .collect();
        let mut out = Vec::new();
        while let Some((&start, _)) = rem.iter().find(|(_, &m)| m > 0) {
            let mut len = 0;
            while let Some(m) = rem.get_mut(&(start + len as i64)).filter(|m| **m > 0) {
                *m -= 1;
                len += 1;
            }
            out.push((self.values[&start].clone(), len));
        }
        out
    }
}

/// Groups the roots of all inputs into shift classes, ordered by the
/// canonical text of their representatives.
fn build_grids<S: Scalar>(fs: &[&FactoredPoly<S>], tol: Tolerance) -> Result<Vec<Grid<S>>> {
    let width = fs.len();
    let mut anchors: Vec<(S, BTreeMap<i64, S>, BTreeMap<i64, Vec<usize>>)> = Vec::new();
    for (which, f) in fs.iter().enumerate() {
        for (r, m) in f.roots() {
            let mut home = None;
            for (idx, (anchor, _, _)) in anchors.iter().enumerate() {
                match r.minus(anchor).classify_integer(tol) {
                    IntegerTest::Integer(k) => {
                        let k = k.to_i64().ok_or_else(|| {
                            Error::InvalidArgument(format!("shift between {r} and {anchor} is too large"))
                        })?;
                        home = Some((idx, k));
                        break;
                    }
                    IntegerTest::Ambiguous => {
                        return Err(Error::AmbiguousShift {
                            left: anchor.to_string(),
                            right: r.to_string(),
                        })
                    }
                    IntegerTest::NotInteger => {}
                }
            }
            let (idx, k) = home.unwrap_or_else(|| {
                anchors.push((r.clone(), BTreeMap::new(), BTreeMap::new()));
                (anchors.len() - 1, 0)
            });
            let (_, values, counts) = &mut anchors[idx];
            values.entry(k).or_insert_with(|| r.clone());
            counts.entry(k).or_insert_with(|| vec![0; width])[which] += m;
        }
    }
    let mut grids: Vec<Grid<S>> = anchors
        .into_iter()
        .map(|(_, values, counts)| {
            let base = *values.keys().next().expect("nonempty class");
            Grid {
                values: values.into_iter().map(|(k, v)| (k - base, v)).collect(),
                counts: counts.into_iter().map(|(k, v)| (k - base, v)).collect(),
            }
        })
        .collect();
    grids.sort_by_cached_key(|g| g.representative().sort_key());
    Ok(grids)
}

/// Shift classes of the roots of `f`.
pub fn shift_classes<S: Scalar>(f: &FactoredPoly<S>, tol: Tolerance) -> Result<Vec<ShiftClass<S>>> {
    Ok(build_grids(&[f], tol)?
        .into_iter()
        .map(|g| ShiftClass {
            representative: g.representative().clone(),
            members: g.counts.iter().map(|(&k, c)| (k, c[0])).collect(),
        })
        .collect())
}

/// `P = lead * prod (z - start)^(len falling)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainDecomposition<S> {
    pub lead: S,
    pub chains: Vec<(S, usize)>,
}

impl<S: Scalar> ChainDecomposition<S> {
    pub fn degree(&self) -> usize {
        self.chains.iter().map(|(_, n)| n).sum()
    }

    pub fn starts(&self) -> impl Iterator<Item = &S> {
        self.chains.iter().map(|(s, _)| s)
    }

    pub fn expand(&self) -> Poly<S> {
        self.chains
            .iter()
            .fold(Poly::constant(self.lead.clone()), |acc, (s, n)| {
                &acc * &falling_linear(s, *n)
            })
    }
}

/// `(z - w)^(n falling) = (z - w)(z - w - 1)...(z - w - n + 1)`.
pub fn falling_linear<S: Scalar>(w: &S, n: usize) -> Poly<S> {
    (0..n).fold(Poly::one(), |acc, j| {
        &acc * &Poly::linear(&w.plus(&S::from_i64(j as i64)))
    })
}

pub fn chain_decomposition<S: Scalar>(f: &FactoredPoly<S>) -> Result<ChainDecomposition<S>> {
    chain_decomposition_tol(f, Tolerance::Auto)
}

/// Chain decomposition; shift classes are processed in canonical order of
/// their representatives, chains within a class by increasing start.
pub fn chain_decomposition_tol<S: Scalar>(f: &FactoredPoly<S>, tol: Tolerance) -> Result<ChainDecomposition<S>> {
    let chains = build_grids(&[f], tol)?.iter().flat_map(|g| g.chains(0)).collect();
    Ok(ChainDecomposition {
        lead: f.lead().clone(),
        chains,
    })
}

fn is_root<S: Scalar>(p: &Poly<S>, x: &S, tol: Tolerance) -> bool {
    p.eval(x).near_zero(tol)
}

/// Height of the shifting zero `z0`: the length of the run
/// `p(z0) = p(z0+1) = ... = p(z0+n-1) = 0`. Cross-checked against the
/// definition through `Δ^k p(z0)`.
pub fn shifting_zero_height<S: Scalar>(p: &Poly<S>, z0: &S) -> Result<usize> {
    shifting_zero_height_tol(p, z0, Tolerance::Auto)
}

pub fn shifting_zero_height_tol<S: Scalar>(p: &Poly<S>, z0: &S, tol: Tolerance) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero polynomial has no shifting zeros".into(),
        ));
    }
    let mut n = 0;
    while is_root(p, &z0.plus(&S::from_i64(n as i64)), tol) {
        n += 1;
    }
    if S::EXACT {
        let mut d = p.clone();
        let mut by_delta = 0;
        while d.eval(z0).is_zero() {
            d = delta(&d);
            by_delta += 1;
        }
        if by_delta != n {
            return Err(Error::CrossCheck(format!(
                "height {n} from consecutive zeros, {by_delta} from differences"
            )));
        }
    }
    Ok(n)
}

/// Splits `p = (z - z0)^(n falling) * g` with `n` the height of `z0`.
pub fn factor_at<S: Scalar>(p: &Poly<S>, z0: &S) -> Result<(usize, Poly<S>)> {
    let n = shifting_zero_height(p, z0)?;
    if n == 0 {
        return Err(Error::NotAZero { point: z0.to_string() });
    }
    let g = p.div_exact(&falling_linear(z0, n))?;
    Ok((n, g))
}

/// Height of `z0` read off the root data of a factored polynomial.
pub fn factored_height<S: Scalar>(f: &FactoredPoly<S>, z0: &S, tol: Tolerance) -> usize {
    let mut n = 0;
    while order_near(f, &z0.plus(&S::from_i64(n as i64)), tol) > 0 {
        n += 1;
    }
    n
}

fn order_near<S: Scalar>(f: &FactoredPoly<S>, w: &S, tol: Tolerance) -> usize {
    f.roots()
        .iter()
        .filter(|(r, _)| r.approx_eq(w, tol))
        .map(|(_, m)| m)
        .sum()
}

pub fn rad_delta<S: Scalar>(f: &FactoredPoly<S>) -> Result<Poly<S>> {
    rad_delta_tol(f, Tolerance::Auto)
}

/// Monic product of `z - start` over all chain starts (with repetition).
///
/// The count of chains starting at `w` is checked against the closed form
/// `max(0, ord_w - ord_(w-1))`.
pub fn rad_delta_tol<S: Scalar>(f: &FactoredPoly<S>, tol: Tolerance) -> Result<Poly<S>> {
    let grids = build_grids(&[f], tol)?;
    let mut starts = Vec::new();
    for g in &grids {
        let chains = g.chains(0);
        for &k in g.counts.keys() {
            let closed = g.count(k, 0).saturating_sub(g.count(k - 1, 0));
            let greedy = chains.iter().filter(|(s, _)| *s == g.values[&k]).count();
            if closed != greedy {
                return Err(Error::CrossCheck(format!(
                    "{greedy} chains start at {}, closed form gives {closed}",
                    g.values[&k]
                )));
            }
        }
        starts.extend(chains.into_iter().map(|(s, _)| s));
    }
    Ok(Poly::from_roots(&starts))
}

pub fn rad_kappa<S: Scalar>(f: &FactoredPoly<S>, kappa: i64) -> Result<Poly<S>> {
    rad_kappa_tol(f, kappa, Tolerance::Auto)
}

/// `prod_w (z - w)^(d(w))` with `d(w) = ord_w - min(ord_w, ord_(w+kappa))`.
pub fn rad_kappa_tol<S: Scalar>(f: &FactoredPoly<S>, kappa: i64, tol: Tolerance) -> Result<Poly<S>> {
    if kappa == 0 {
        return Err(Error::InvalidArgument("kappa must be nonzero".into()));
    }
    let mut out = Poly::one();
    for g in build_grids(&[f], tol)? {
        for (&k, w) in &g.values {
            let here = g.count(k, 0);
            let d = here - here.min(g.count(k + kappa, 0));
            out = &out * &Poly::linear(w).pow(d);
        }
    }
    Ok(out)
}

/// `prod_j (z - z_j)^(min(n_j, q) falling)`; `q = 1` gives [`rad_delta`].
pub fn rad_delta_q<S: Scalar>(f: &FactoredPoly<S>, q: usize) -> Result<Poly<S>> {
    rad_delta_q_tol(f, q, Tolerance::Auto)
}

pub fn rad_delta_q_tol<S: Scalar>(f: &FactoredPoly<S>, q: usize, tol: Tolerance) -> Result<Poly<S>> {
    if q == 0 {
        return Err(Error::InvalidArgument("truncation level must be positive".into()));
    }
    let chains = chain_decomposition_tol(f, tol)?;
    Ok(chains
        .chains
        .iter()
        .fold(Poly::one(), |acc, (s, n)| &acc * &falling_linear(s, (*n).min(q))))
}

/// `gcd(P, ΔP, ..., Δ^n P)` by iterated Euclidean gcds.
pub fn gcd_tower_euclid<S: Scalar>(p: &Poly<S>, n: usize) -> Result<Poly<S>> {
    let mut g = p.monic()?;
    let mut d = p.clone();
    for _ in 0..n {
        d = delta(&d);
        g = g.gcd(&d)?;
    }
    Ok(g)
}

pub fn gcd_tower<S: Scalar>(f: &FactoredPoly<S>, n: usize) -> Result<Poly<S>> {
    gcd_tower_tol(f, n, Tolerance::Auto)
}

/// `gcd(P, ΔP, ..., Δ^n P) = prod_j (z - z_j)^([n_j - n]^+ falling)`.
///
/// In the exact backend the closed form is checked against the Euclidean
/// computation.
pub fn gcd_tower_tol<S: Scalar>(f: &FactoredPoly<S>, n: usize, tol: Tolerance) -> Result<Poly<S>> {
    Ok(gcd_tower_levels_tol(f, n, tol)?.pop().expect("n >= 1 levels"))
}

/// The towers `gcd(P, ..., Δ^k P)` for `k = 1..=n`, sharing one Euclidean
/// cross-check in the exact backend.
pub fn gcd_tower_levels<S: Scalar>(f: &FactoredPoly<S>, n: usize) -> Result<Vec<Poly<S>>> {
    gcd_tower_levels_tol(f, n, Tolerance::Auto)
}

pub fn gcd_tower_levels_tol<S: Scalar>(f: &FactoredPoly<S>, n: usize, tol: Tolerance) -> Result<Vec<Poly<S>>> {
    if n == 0 {
        return Err(Error::InvalidArgument("tower height must be positive".into()));
    }
    let chains = chain_decomposition_tol(f, tol)?;
    let p = f.expand();
    let mut euclid = p.monic()?;
    let mut d = p;
    (1..=n)
        .map(|k| {
            let closed = chains.chains.iter().fold(Poly::one(), |acc, (s, len)| {
                &acc * &falling_linear(s, len.saturating_sub(k))
            });
            if S::EXACT {
                d = delta(&d);
                euclid = euclid.gcd(&d)?;
                if euclid != closed {
                    return Err(Error::CrossCheck(format!(
                        "closed-form gcd {closed} differs from Euclidean gcd {euclid} at height {k}"
                    )));
                }
            }
            Ok(closed)
        })
        .collect()
}

pub fn common_shifting_divisors<S: Scalar>(f: &FactoredPoly<S>, g: &FactoredPoly<S>) -> Result<Vec<S>> {
    common_shifting_divisors_tol(f, g, Tolerance::Auto)
}

/// Every `z1` such that `z1` is a zero of one polynomial and, for some
/// `1 <= m <= height(z1)` in that polynomial, `z1 + m` is a zero of the
/// other. Each point is reported once.
pub fn common_shifting_divisors_tol<S: Scalar>(
    f: &FactoredPoly<S>,
    g: &FactoredPoly<S>,
    tol: Tolerance,
) -> Result<Vec<S>> {
    let mut out = Vec::new();
    for grid in build_grids(&[f, g], tol)? {
        for (&k, w) in &grid.values {
            let reported = [(0, 1), (1, 0)].into_iter().any(|(own, other)| {
                let mut m = 1;
                while grid.count(k + m - 1, own) > 0 {
                    if grid.count(k + m, other) > 0 {
                        return true;
                    }
                    m += 1;
                }
                false
            });
            if reported {
                out.push(w.clone());
            }
        }
    }
    out.sort_by_cached_key(Scalar::sort_key);
    Ok(out)
}

pub fn is_shifting_prime<S: Scalar>(f: &FactoredPoly<S>, g: &FactoredPoly<S>) -> Result<bool> {
    Ok(common_shifting_divisors(f, g)?.is_empty())
}

/// A pair of inputs sharing the shifting divisor `z - divisor`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftingWitness<S> {
    pub left: usize,
    pub right: usize,
    pub divisor: S,
}

/// The first offending pair (in index order), or `None` when every pair is
/// shifting prime.
pub fn pairwise_shifting_prime<S: Scalar>(
    fs: &[FactoredPoly<S>],
    tol: Tolerance,
) -> Result<Option<ShiftingWitness<S>>> {
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if let Some(d) = common_shifting_divisors_tol(&fs[i], &fs[j], tol)?.into_iter().next() {
                return Ok(Some(ShiftingWitness {
                    left: i,
                    right: j,
                    divisor: d,
                }));
            }
        }
    }
    Ok(None)
}
