mod common;

use common::{chain_built, chain_built_with, deg, int_roots, q, random_nonzero_rational, rng, seeds};
use diffrad::diffcalc::delta;
use diffrad::poly::{FactoredPoly, Poly};
use diffrad::scalar::{ExactScalar, Scalar};
use diffrad::shiftcalc::{
    chain_decomposition, gcd_tower, gcd_tower_euclid, is_shifting_prime, rad_delta, rad_delta_q, rad_kappa,
    shifting_zero_height,
};
use proptest::prelude::*;
use rand::Rng;

/// Height by direct evaluation: how many of `z0, z0+1, ...` are zeros.
fn height_by_evaluation(p: &Poly<ExactScalar>, z0: &ExactScalar) -> usize {
    (0..).take_while(|&j| p.eval(&z0.plus(&q(j))).is_zero()).count()
}

fn deg_rad_q(f: &FactoredPoly<ExactScalar>, n: usize) -> usize {
    deg(&rad_delta_q(f, n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn degree_splits_into_gcd_and_radical(seed in seeds()) {
        let f = chain_built(&mut rng(seed));
        let p = f.expand();
        // Euclidean gcd(P, ΔP) as the oracle.
        let g = p.gcd(&delta(&p)).unwrap();
        prop_assert_eq!(f.degree(), deg(&g) + deg(&rad_delta(&f).unwrap()));
    }

    #[test]
    fn difference_radicals_have_equal_degree(seed in seeds()) {
        let f = chain_built(&mut rng(seed));
        prop_assert_eq!(deg(&rad_delta(&f).unwrap()), deg(&rad_kappa(&f, 1).unwrap()));
    }

    #[test]
    fn chains_rebuild_the_polynomial(seed in seeds()) {
        let f = chain_built(&mut rng(seed));
        let chains = chain_decomposition(&f).unwrap();
        prop_assert_eq!(chains.expand(), f.expand());
        prop_assert_eq!(chains.degree(), f.degree());
        // Every chain start is a zero whose left neighbour is not... unless
        // it belongs to an overlapping chain of the same class.
        let rad = rad_delta(&f).unwrap();
        prop_assert_eq!(deg(&rad), chains.chains.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn tower_degrees_match_truncated_radicals(seed in seeds()) {
        let f = chain_built_with(&mut rng(seed), 4, 5);
        let p = f.expand();
        for n in 1..=5usize {
            let closed = gcd_tower(&f, n).unwrap();
            prop_assert_eq!(&closed, &gcd_tower_euclid(&p, n).unwrap());
            prop_assert_eq!(f.degree() - deg(&closed), deg_rad_q(&f, n));
        }
    }

    #[test]
    fn truncated_radical_bounds(seed in seeds()) {
        let f = chain_built(&mut rng(seed));
        let base = deg(&rad_delta(&f).unwrap());
        prop_assert_eq!(deg_rad_q(&f, 1), base);
        for q in 1..=5usize {
            prop_assert!(deg_rad_q(&f, q) <= q * base);
            prop_assert!(deg_rad_q(&f, q) <= deg_rad_q(&f, q + 1));
        }
    }

    #[test]
    fn truncated_radical_is_subadditive(seed in seeds()) {
        let mut r = rng(seed);
        let (f, g) = (chain_built_with(&mut r, 3, 4), chain_built_with(&mut r, 3, 4));
        let fg = f.mul(&g);
        let prime = is_shifting_prime(&f, &g).unwrap();
        for n in 1..=4usize {
            let (a, b, c) = (deg_rad_q(&fg, n), deg_rad_q(&f, n), deg_rad_q(&g, n));
            prop_assert!(a <= b + c, "n = {n}: {a} > {b} + {c}");
            if prime {
                prop_assert_eq!(a, b + c, "n = {}", n);
            }
        }
    }

    #[test]
    fn height_drops_by_one_under_delta(seed in seeds()) {
        let mut r = rng(seed);
        let f = chain_built(&mut r);
        let p = f.expand();
        let (z0, _) = f.roots()[r.random_range(0..f.roots().len())].clone();
        let n = shifting_zero_height(&p, &z0).unwrap();
        prop_assert_eq!(n, height_by_evaluation(&p, &z0));
        prop_assert!(n >= 1);
        prop_assert_eq!(shifting_zero_height(&delta(&p), &z0).unwrap(), n - 1);
    }

    #[test]
    fn radical_ignores_scaling(seed in seeds()) {
        let mut r = rng(seed);
        let f = chain_built(&mut r);
        let lambda = random_nonzero_rational(&mut r);
        let scaled = f.scale(&lambda).unwrap();
        prop_assert_eq!(rad_delta(&scaled).unwrap(), rad_delta(&f).unwrap());
        prop_assert_eq!(rad_kappa(&scaled, 1).unwrap(), rad_kappa(&f, 1).unwrap());
    }
}

#[test]
fn common_shifting_divisor_example() {
    use diffrad::shiftcalc::common_shifting_divisors;
    // f = z^2 (z-1), g = (z-2)(z-3): z-1 links the chains.
    let f = int_roots(1, &[(0, 2), (1, 1)]);
    let g = int_roots(1, &[(2, 1), (3, 1)]);
    let found = common_shifting_divisors(&f, &g).unwrap();
    assert!(!found.is_empty());
    assert!(!is_shifting_prime(&f, &g).unwrap());
    let far = int_roots(1, &[(10, 1)]);
    assert!(is_shifting_prime(&f, &far).unwrap());
}
