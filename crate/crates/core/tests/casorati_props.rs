mod common;

use common::{chain_built_with, deg, q, random_poly, random_rational_poly, random_scalar, rng, seeds};
use diffrad::casorati::{casorati_matrix, casoratian, determinant, linearly_independent, CasoratiForm};
use diffrad::poly::Poly;
use diffrad::scalar::{ExactScalar, Scalar, Tolerance};
use diffrad::shiftcalc::gcd_tower;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

type P = Poly<ExactScalar>;

fn tuple(r: &mut ChaCha8Rng, m: usize, max_deg: usize) -> Vec<P> {
    (0..m).map(|_| random_poly(r, max_deg)).collect()
}

/// Determinant of a scalar matrix by Gaussian elimination.
fn scalar_det(mut a: Vec<Vec<ExactScalar>>) -> ExactScalar {
    let n = a.len();
    let mut det = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return ExactScalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = det.negated();
        }
        det = det.times(&a[c][c]);
        let inv = a[c][c].inverse().unwrap();
        for r in c + 1..n {
            let f = a[r][c].times(&inv);
            for k in c..n {
                let sub = f.times(&a[c][k]);
                a[r][k] = a[r][k].minus(&sub);
            }
        }
    }
    det
}

/// Casoratian at `x` straight from the definition `det f_i(x + k)`.
fn casoratian_at(fs: &[P], x: &ExactScalar) -> ExactScalar {
    let m = fs.len();
    scalar_det(
        (0..m)
            .map(|k| fs.iter().map(|f| f.eval(&x.plus(&q(k as i64)))).collect())
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn delta_and_shift_forms_agree(seed in seeds()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=4);
        let fs = tuple(&mut r, m, 8);
        let d = casoratian(&fs, CasoratiForm::Delta).unwrap();
        prop_assert_eq!(&d, &casoratian(&fs, CasoratiForm::Shift).unwrap());
        let x = random_scalar(&mut r);
        prop_assert_eq!(d.eval(&x), casoratian_at(&fs, &x));
    }

    #[test]
    fn alternating_and_multilinear(seed in seeds()) {
        let mut r = rng(seed);
        let m = r.random_range(2..=4);
        let fs = tuple(&mut r, m, 6);
        let c = casoratian(&fs, CasoratiForm::Delta).unwrap();
        let (i, j) = (r.random_range(0..m), r.random_range(0..m));
        let mut swapped = fs.clone();
        swapped.swap(i, j);
        let expected = if i == j { c.clone() } else { -&c };
        prop_assert_eq!(casoratian(&swapped, CasoratiForm::Delta).unwrap(), expected);
        let mut dup = fs.clone();
        dup[(i + 1) % m] = fs[i].clone();
        prop_assert!(casoratian(&dup, CasoratiForm::Delta).unwrap().is_zero());
        // Linear in column i.
        let g = random_poly(&mut r, 6);
        let a = random_scalar(&mut r);
        let mut combo = fs.clone();
        combo[i] = &fs[i].scale(&a) + &g;
        let mut with_g = fs.clone();
        with_g[i] = g;
        let rhs = &c.scale(&a) + &casoratian(&with_g, CasoratiForm::Delta).unwrap();
        prop_assert_eq!(casoratian(&combo, CasoratiForm::Delta).unwrap(), rhs);
    }

    #[test]
    fn degree_bound(seed in seeds()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=4);
        let fs: Vec<P> = (0..m)
            .map(|_| loop {
                let f = random_rational_poly(&mut r, 7);
                if f.deg().is_some_and(|d| d + 1 >= m) {
                    break f;
                }
            })
            .collect();
        let c = casoratian(&fs, CasoratiForm::Delta).unwrap();
        let total: usize = fs.iter().map(deg).sum();
        if !c.is_zero() {
            prop_assert!(deg(&c) + m * (m - 1) / 2 <= total);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tower_gcd_divides_casoratian(seed in seeds()) {
        let mut r = rng(seed);
        let m = r.random_range(1..=3);
        let fs: Vec<_> = (0..m).map(|_| chain_built_with(&mut r, 3, 4)).collect();
        let expanded: Vec<P> = fs.iter().map(|f| f.expand()).collect();
        let c = casoratian(&expanded, CasoratiForm::Delta).unwrap();
        if m >= 2 {
            for f in &fs {
                let g = gcd_tower(f, m - 1).unwrap();
                prop_assert!(c.div_exact(&g).is_ok(), "{g} does not divide {c}");
            }
        }
    }

    #[test]
    fn bareiss_matches_point_evaluation(seed in seeds()) {
        let mut r = rng(seed);
        let m = r.random_range(5..=6);
        let fs: Vec<P> = (0..m).map(|_| random_rational_poly(&mut r, 7)).collect();
        let c = determinant(&casorati_matrix(&fs, CasoratiForm::Shift)).unwrap();
        prop_assert_eq!(&c, &casoratian(&fs, CasoratiForm::Delta).unwrap());
        let x = common::random_rational(&mut r, 5);
        prop_assert_eq!(c.eval(&x), casoratian_at(&fs, &x));
    }
}

#[test]
fn independence_of_falling_factorials() {
    use diffrad::diffcalc::falling_factorial;
    let basis: Vec<P> = (0..5).map(falling_factorial).collect();
    assert!(linearly_independent(&basis, Tolerance::Auto).unwrap());
    let dependent = vec![basis[1].clone(), basis[2].clone(), &basis[1] + &basis[2]];
    assert!(!linearly_independent(&dependent, Tolerance::Auto).unwrap());
    // The Casoratian of 1, z, z^(2), ... is the product of factorials.
    let c = casoratian(&basis, CasoratiForm::Delta).unwrap();
    assert_eq!(c, Poly::constant(q(1 * 2 * 6 * 24)));
}
