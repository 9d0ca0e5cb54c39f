mod common;

use common::{q, random_poly, random_scalar, rng, seeds};
use diffrad::diffcalc::{
    binomial_row, binomial_transform_check, delta, delta_k, falling_factorial, falling_power, from_newton,
    raising_power, shift, to_newton,
};
use diffrad::poly::Poly;
use diffrad::scalar::{ExactScalar, Scalar};
use num_bigint::BigInt;
use num_integer::binomial;
use proptest::prelude::*;
use rand::Rng;

fn at(p: &Poly<ExactScalar>, z: &ExactScalar, offset: i64) -> ExactScalar {
    p.eval(&z.plus(&q(offset)))
}

fn choose(k: usize, j: usize) -> ExactScalar {
    ExactScalar::from_bigint(&binomial(BigInt::from(k), BigInt::from(j)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn delta_is_linear(seed in seeds()) {
        let mut r = rng(seed);
        let (p, s) = (random_poly(&mut r, 7), random_poly(&mut r, 7));
        let (a, b) = (random_scalar(&mut r), random_scalar(&mut r));
        let combo = &p.scale(&a) + &s.scale(&b);
        prop_assert_eq!(delta(&combo), &delta(&p).scale(&a) + &delta(&s).scale(&b));
    }

    #[test]
    fn delta_commutes_with_shift(seed in seeds()) {
        let mut r = rng(seed);
        let p = random_poly(&mut r, 8);
        let k = r.random_range(-6..=6);
        prop_assert_eq!(delta(&shift(&p, k)), shift(&delta(&p), k));
    }

    #[test]
    fn delta_lowers_degree_by_one(seed in seeds()) {
        let mut r = rng(seed);
        let p = random_poly(&mut r, 8);
        match p.deg() {
            Some(d) if d >= 1 => prop_assert_eq!(delta(&p).deg(), Some(d - 1)),
            _ => prop_assert!(delta(&p).is_zero()),
        }
    }

    #[test]
    fn delta_matches_pointwise_difference(seed in seeds()) {
        let mut r = rng(seed);
        let p = random_poly(&mut r, 8);
        let z = random_scalar(&mut r);
        prop_assert_eq!(delta(&p).eval(&z), at(&p, &z, 1).minus(&p.eval(&z)));
    }

    #[test]
    fn newton_roundtrip(seed in seeds()) {
        let mut r = rng(seed);
        let p = random_poly(&mut r, 9);
        let z0 = random_scalar(&mut r);
        let e = to_newton(&p, &z0).unwrap();
        prop_assert_eq!(from_newton(&e), p.clone());
        // a_j = Δ^j p(z0) / j!, recomputed from point values.
        for (j, a) in e.coeffs.iter().enumerate() {
            let diff = (0..=j).fold(ExactScalar::zero(), |acc, i| {
                let term = choose(j, i).times(&at(&p, &z0, i as i64));
                if (j - i) % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) }
            });
            let factorial = (1..=j as i64).fold(q(1), |acc, i| acc.times(&q(i)));
            prop_assert_eq!(a.times(&factorial), diff);
        }
    }

    #[test]
    fn binomial_identities(seed in seeds()) {
        let mut r = rng(seed);
        let p = random_poly(&mut r, 8);
        let z = random_scalar(&mut r);
        let k = r.random_range(0..=6usize);
        prop_assert_eq!(binomial_transform_check(&p, &z, k), (true, true));
        // Independent evaluation of both sides.
        let forward = (0..=k).fold(ExactScalar::zero(), |acc, j| {
            acc.plus(&choose(k, j).times(&delta_k(&p, j).eval(&z)))
        });
        prop_assert_eq!(at(&p, &z, k as i64), forward);
        let backward = (0..=k).fold(ExactScalar::zero(), |acc, j| {
            let term = choose(k, j).times(&at(&p, &z, j as i64));
            if (k - j) % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) }
        });
        prop_assert_eq!(delta_k(&p, k).eval(&z), backward);
    }

    #[test]
    fn falling_powers_split(seed in seeds()) {
        let mut r = rng(seed);
        let p = random_poly(&mut r, 3);
        let (m, n) = (r.random_range(0..=3usize), r.random_range(0..=3usize));
        let joined = falling_power(&p, m + n);
        let split = &falling_power(&p, m) * &shift(&falling_power(&p, n), -(m as i64));
        prop_assert_eq!(joined, split);
        // Raising powers run the other way.
        prop_assert_eq!(raising_power(&p, m), shift(&falling_power(&p, m), m as i64 - 1));
    }
}

#[test]
fn delta_of_falling_factorial() {
    for n in 1..=12usize {
        let lhs = delta(&falling_factorial::<ExactScalar>(n));
        let rhs = falling_factorial::<ExactScalar>(n - 1).scale(&q(n as i64));
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn falling_factorial_values() {
    // z^(3) = z^3 - 3z^2 + 2z
    assert_eq!(falling_factorial::<ExactScalar>(3), common::ints(&[0, 2, -3, 1]));
    assert_eq!(falling_factorial::<ExactScalar>(0), Poly::one());
    for n in 0..=12usize {
        let row = binomial_row(n);
        for (j, c) in row.iter().enumerate() {
            assert_eq!(*c, binomial(BigInt::from(n), BigInt::from(j)));
        }
    }
}
