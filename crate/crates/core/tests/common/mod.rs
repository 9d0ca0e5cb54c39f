//! Random instance builders shared by the integration tests.
#![allow(dead_code)]

use diffrad::poly::{FactoredPoly, Poly};
use diffrad::scalar::{ExactScalar, Scalar};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> ExactScalar {
    ExactScalar::from_integer(n)
}

pub fn ratio(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

pub fn sqrt(n: i64) -> ExactScalar {
    ExactScalar::sqrt_of_integer(&BigInt::from(n)).unwrap()
}

pub fn ints(c: &[i64]) -> Poly<ExactScalar> {
    Poly::new(c.iter().map(|&x| q(x)).collect())
}

pub fn int_roots(lead: i64, roots: &[(i64, usize)]) -> FactoredPoly<ExactScalar> {
    FactoredPoly::new(q(lead), roots.iter().map(|&(r, m)| (q(r), m))).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Basis elements of the coefficient fields exercised by the tests.
fn basis(k: usize) -> ExactScalar {
    match k {
        0 => q(1),
        1 => ExactScalar::i(),
        2 => sqrt(2),
        3 => sqrt(3),
        _ => ExactScalar::i().times(&sqrt(2)),
    }
}

/// A small rational `p/d`.
pub fn random_rational(rng: &mut ChaCha8Rng, span: i64) -> ExactScalar {
    ratio(rng.random_range(-span..=span), rng.random_range(1..=6))
}

/// A random element of `Q(i, sqrt 2, sqrt 3)` with up to three terms.
pub fn random_scalar(rng: &mut ChaCha8Rng) -> ExactScalar {
    let terms = rng.random_range(1..=3);
    (0..terms).fold(ExactScalar::zero(), |acc, _| {
        acc.plus(&random_rational(rng, 20).times(&basis(rng.random_range(0..5))))
    })
}

pub fn random_nonzero_scalar(rng: &mut ChaCha8Rng) -> ExactScalar {
    loop {
        let x = random_scalar(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A dense polynomial of degree at most `max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly<ExactScalar> {
    let d = rng.random_range(0..=max_deg);
    Poly::new((0..=d).map(|_| random_scalar(rng)).collect())
}

/// A dense polynomial with rational coefficients.
pub fn random_rational_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly<ExactScalar> {
    let d = rng.random_range(0..=max_deg);
    Poly::new((0..=d).map(|_| random_rational(rng, 9)).collect())
}

/// Chain offsets live on these bases, so distinct bases never interact.
fn chain_base(k: usize) -> ExactScalar {
    match k {
        0 => q(0),
        1 => ratio(1, 2),
        2 => ratio(1, 3),
        3 => ExactScalar::i(),
        4 => q(1).plus(&ExactScalar::i().times(&ratio(1, 2))),
        _ => sqrt(2),
    }
}

/// A polynomial built from at most `max_chains` runs of consecutive zeros,
/// each of length at most `max_len`; runs may overlap, so multiplicities
/// above one occur.
pub fn chain_built_with(rng: &mut ChaCha8Rng, max_chains: usize, max_len: usize) -> FactoredPoly<ExactScalar> {
    let chains = rng.random_range(1..=max_chains);
    let mut roots = Vec::new();
    for _ in 0..chains {
        let base = chain_base(rng.random_range(0..6));
        let start = rng.random_range(-4..=4i64);
        let len = rng.random_range(1..=max_len) as i64;
        for j in start..start + len {
            roots.push((base.plus(&q(j)), 1));
        }
    }
    FactoredPoly::new(random_nonzero_rational(rng), roots).unwrap()
}

/// Chains at most 6, lengths at most 5.
pub fn chain_built(rng: &mut ChaCha8Rng) -> FactoredPoly<ExactScalar> {
    chain_built_with(rng, 6, 5)
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> ExactScalar {
    loop {
        let x = random_rational(rng, 9);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Factored polynomial with roots on a small rational grid.
pub fn grid_factored(rng: &mut ChaCha8Rng, max_roots: usize) -> FactoredPoly<ExactScalar> {
    let lead = random_nonzero_rational(rng);
    let n = rng.random_range(0..=max_roots);
    let roots: Vec<_> = (0..n)
        .map(|_| {
            (
                ratio(rng.random_range(-4..=4), rng.random_range(1..=2)),
                rng.random_range(1..=3),
            )
        })
        .collect();
    FactoredPoly::new(lead, roots).unwrap()
}

/// Seeds as a proptest strategy; the instance is rebuilt from the seed.
pub fn seeds() -> impl Strategy<Value = u64> {
    any::<u64>()
}

/// Degree of a polynomial with the zero polynomial counted as 0.
pub fn deg(p: &Poly<ExactScalar>) -> usize {
    p.deg().unwrap_or(0)
}
