//! Forward-difference calculus on polynomials.
//!
//! `Δp(z) = p(z+1) - p(z)`, its iterates, falling and raising factorial
//! powers, and the Newton (falling factorial) basis.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// `p(z + k)` by binomial expansion of every power `(z + k)^n`.
pub fn shift<S: Scalar>(p: &Poly<S>, k: i64) -> Poly<S> {
    if k == 0 || p.is_constant() {
        return p.clone();
    }
    let n = p.coeffs().len();
    let k = BigInt::from(k);
    let mut out = vec![S::zero(); n];
    for (power, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // (z + k)^power = sum_j C(power, j) k^(power - j) z^j
        let row = binomial_row(power);
        let mut k_pow = BigInt::one();
        for j in (0..=power).rev() {
            let w = S::from_bigint(&(&row[j] * &k_pow));
            out[j] = out[j].plus(&c.times(&w));
            k_pow *= &k;
        }
    }
    Poly::new(out)
}

/// `Δp = p(z + 1) - p(z)`.
pub fn delta<S: Scalar>(p: &Poly<S>) -> Poly<S> {
    &shift(p, 1) - p
}

/// `Δ^k p` by `k`-fold application of [`delta`]; `Δ^0 p = p`.
pub fn delta_k<S: Scalar>(p: &Poly<S>, k: usize) -> Poly<S> {
    let mut out = p.clone();
    for _ in 0..k {
        if out.is_zero() {
            break;
        }
        out = delta(&out);
    }
    out
}

/// `p(z) p(z-1) ... p(z-n+1)`; the empty product for `n = 0` is `1`.
pub fn falling_power<S: Scalar>(p: &Poly<S>, n: usize) -> Poly<S> {
    (0..n).fold(Poly::one(), |acc, j| &acc * &shift(p, -(j as i64)))
}

/// `p(z) p(z+1) ... p(z+n-1)`.
pub fn raising_power<S: Scalar>(p: &Poly<S>, n: usize) -> Poly<S> {
    (0..n).fold(Poly::one(), |acc, j| &acc * &shift(p, j as i64))
}

/// `z(z-1)...(z-n+1)`.
pub fn falling_factorial<S: Scalar>(n: usize) -> Poly<S> {
    falling_power(&Poly::z(), n)
}

/// `p(z) = sum_j coeffs[j] * (z - base)^(j falling)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonExpansion<S> {
    pub base: S,
    pub coeffs: Vec<S>,
}

/// Newton coefficients `a_j = Δ^j p(base) / j!` for `j = 0..=deg p`.
///
/// The zero polynomial has the single coefficient `0`.
pub fn to_newton<S: Scalar>(p: &Poly<S>, base: &S) -> Result<NewtonExpansion<S>> {
    let n = p.deg().unwrap_or(0);
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut d = p.clone();
    let mut factorial = BigInt::one();
    for j in 0..=n {
        if j > 0 {
            d = delta(&d);
            factorial *= j;
        }
        coeffs.push(d.eval(base).divided(&S::from_bigint(&factorial))?);
    }
    Ok(NewtonExpansion {
        base: base.clone(),
        coeffs,
    })
}

/// Rebuilds the polynomial from its Newton coefficients.
pub fn from_newton<S: Scalar>(e: &NewtonExpansion<S>) -> Poly<S> {
    let basis_root = Poly::linear(&e.base);
    let mut basis = Poly::one();
    let mut out = Poly::zero();
    for (j, a) in e.coeffs.iter().enumerate() {
        if j > 0 {
            // (z - base)^(j falling) = (z - base)^(j-1 falling) * (z - base - (j-1))
            basis = &basis * &shift(&basis_root, -(j as i64 - 1));
        }
        out = &out + &basis.scale(a);
    }
    out
}

/// Checks, at the point `z`,
///
/// * `p(z + k) = sum_j C(k, j) Δ^j p(z)` and
/// * `Δ^k p(z) = sum_j C(k, j) (-1)^(k-j) p(z + j)`.
pub fn binomial_transform_check<S: Scalar>(p: &Poly<S>, z: &S, k: usize) -> (bool, bool) {
    let row = binomial_row(k);
    let at = |q: &Poly<S>, offset: usize| q.eval(&z.plus(&S::from_i64(offset as i64)));

    let mut forward = S::zero();
    let mut d = p.clone();
    for (j, c) in row.iter().enumerate() {
        if j > 0 {
            d = delta(&d);
        }
        forward = forward.plus(&S::from_bigint(c).times(&d.eval(z)));
    }
    let first = at(p, k) == forward;

    let mut backward = S::zero();
    for (j, c) in row.iter().enumerate() {
        let term = S::from_bigint(c).times(&at(p, j));
        backward = if (k - j) % 2 == 0 {
            backward.plus(&term)
        } else {
            backward.minus(&term)
        };
    }
    let second = delta_k(p, k).eval(z) == backward;
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;

    type P = Poly<ExactScalar>;

    fn p(c: &[i64]) -> P {
        Poly::new(c.iter().map(|&x| ExactScalar::from_integer(x)).collect())
    }

    fn q(n: i64) -> ExactScalar {
        ExactScalar::from_integer(n)
    }

    #[test]
    fn shifts() {
        assert_eq!(shift(&p(&[0, 0, 1]), 1), p(&[1, 2, 1]));
        let f = p(&[3, -1, 4, 1]);
        assert_eq!(shift(&f, 0), f);
        let ff3 = falling_factorial::<ExactScalar>(3);
        // 3z(z-1) = 3z^2 - 3z
        assert_eq!(&shift(&ff3, 1) - &ff3, p(&[0, -3, 3]));
        assert_eq!(shift(&shift(&f, 4), -4), f);
    }

    #[test]
    fn differences() {
        assert_eq!(delta(&falling_factorial::<ExactScalar>(3)), p(&[0, -3, 3]));
        assert_eq!(delta(&p(&[7])), P::zero());
        assert_eq!(delta_k(&p(&[0, 0, 1]), 2), p(&[2]));
        assert_eq!(delta_k(&p(&[0, 0, 1]), 0), p(&[0, 0, 1]));
    }

    #[test]
    fn factorial_powers() {
        assert_eq!(falling_power(&P::z(), 3), p(&[0, 2, -3, 1]));
        assert_eq!(falling_power(&p(&[1, 5, 2]), 0), P::one());
        // z^2 (z-1)^2
        assert_eq!(falling_power(&p(&[0, 0, 1]), 2), p(&[0, 0, 1, -2, 1]));
        // z (z+1)
        assert_eq!(raising_power(&P::z(), 2), p(&[0, 1, 1]));
    }

    #[test]
    fn newton_coefficients() {
        let e = to_newton(&p(&[0, 0, 1]), &q(0)).unwrap();
        assert_eq!(e.coeffs, vec![q(0), q(1), q(1)]);
        assert_eq!(to_newton(&p(&[9]), &q(4)).unwrap().coeffs, vec![q(9)]);
        let base = ExactScalar::ratio(2, 3);
        let basis = falling_power(&Poly::linear(&base), 3);
        assert_eq!(to_newton(&basis, &base).unwrap().coeffs, vec![q(0), q(0), q(0), q(1)]);
        let f = p(&[5, -2, 0, 7]);
        assert_eq!(from_newton(&to_newton(&f, &base).unwrap()), f);
    }

    #[test]
    fn binomial_identities() {
        assert_eq!(binomial_transform_check(&p(&[0, 0, 1]), &q(0), 2), (true, true));
        assert_eq!(binomial_transform_check(&p(&[3, 1]), &q(5), 0), (true, true));
        let ff3 = falling_factorial::<ExactScalar>(3);
        assert_eq!(binomial_transform_check(&ff3, &q(1), 3), (true, true));
        assert_eq!(binomial_row(4), [1, 4, 6, 4, 1].map(BigInt::from).to_vec());
    }
}
