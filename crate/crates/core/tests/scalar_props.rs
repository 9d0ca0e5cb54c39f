mod common;

use common::{q, random_nonzero_scalar, random_scalar, rng, seeds, sqrt};
use diffrad::scalar::{ExactScalar, NumericScalar, Scalar};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn addition_is_associative(seed in seeds()) {
        let mut r = rng(seed);
        let (a, b, c) = (random_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r));
        prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
    }

    #[test]
    fn multiplication_distributes(seed in seeds()) {
        let mut r = rng(seed);
        let (a, b, c) = (random_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
    }

    #[test]
    fn nonzero_elements_are_invertible(seed in seeds()) {
        let mut r = rng(seed);
        let a = random_nonzero_scalar(&mut r);
        prop_assert!(a.times(&a.inverse().unwrap()).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn multiplication_is_commutative_and_associative(seed in seeds()) {
        let mut r = rng(seed);
        let (a, b, c) = (random_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.minus(&a), ExactScalar::zero());
        prop_assert_eq!(a.negated().negated(), a);
    }

    #[test]
    fn embedding_is_a_homomorphism(seed in seeds()) {
        let mut r = rng(seed);
        let (a, b) = (height_bounded(&mut r), height_bounded(&mut r));
        for precision in [64usize, 256] {
            let embed = |x: &ExactScalar| NumericScalar::from_exact(x, precision);
            // Rounding error scales with the magnitude of the operands.
            let scale = 1.0 + (a.abs_f64() + 1.0) * (b.abs_f64() + 1.0);
            let bound = 2f64.powi(8 - precision as i32) * scale;
            let product = embed(&a.times(&b)).minus(&embed(&a).times(&embed(&b)));
            let sum = embed(&a.plus(&b)).minus(&embed(&a).plus(&embed(&b)));
            prop_assert!(product.abs() < bound, "{} at {precision}", product.abs());
            prop_assert!(sum.abs() < bound, "{} at {precision}", sum.abs());
        }
    }

    #[test]
    fn text_form_is_canonical(seed in seeds()) {
        let mut r = rng(seed);
        let a = random_scalar(&mut r);
        let b = a.plus(&q(1)).minus(&q(1));
        prop_assert_eq!(a.to_string(), b.to_string());
    }
}

/// Scalar with rational parts of height at most 10^3.
fn height_bounded(r: &mut ChaCha8Rng) -> ExactScalar {
    let part = |r: &mut ChaCha8Rng| ExactScalar::ratio(r.random_range(-1000..=1000), r.random_range(1..=1000));
    part(r)
        .plus(&part(r).times(&ExactScalar::i()))
        .plus(&part(r).times(&sqrt(2)))
        .plus(&part(r).times(&sqrt(3)))
}

#[test]
fn radicals_multiply_and_normalize() {
    assert_eq!(sqrt(2).times(&sqrt(3)), sqrt(6));
    assert_eq!(sqrt(2).times(&sqrt(2)), q(2));
    assert_eq!(ExactScalar::i().times(&ExactScalar::i()), q(-1));
    assert_eq!(sqrt(12), q(2).times(&sqrt(3)));
    assert_eq!(
        ExactScalar::sqrt_of_integer(&BigInt::from(-8)).unwrap(),
        q(2).times(&ExactScalar::i()).times(&sqrt(2))
    );
    assert!(q(0).inverse().is_err());
}

#[test]
fn inverses_of_multi_radical_elements() {
    // 1 / (1 + sqrt2 + sqrt3) needs two conjugations.
    let x = q(1).plus(&sqrt(2)).plus(&sqrt(3));
    let inv = x.inverse().unwrap();
    assert!(x.times(&inv).is_one());
    assert_eq!(inv.times(&x), q(1));
}
