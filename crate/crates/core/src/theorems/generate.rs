//! Seeded random instances of `f_1 + ... + f_m = f_(m+1)` satisfying the
//! hypotheses of the difference Mason theorems.
//!
//! Summands get random roots on a rational grid, laid out in short runs so
//! that chains of shifting zeros are common. Their leading coefficients are
//! then solved for, either so that the top coefficients cancel and the sum
//! is at most quadratic (and therefore factors exactly), or so that a fully
//! prescribed right-hand side is hit when every degree equals `m - 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::casorati::linearly_independent;
use crate::error::{Error, Result};
use crate::poly::{factor, FactoredPoly, Poly};
use crate::scalar::{ExactScalar, Scalar, Tolerance};
use crate::shiftcalc::pairwise_shifting_prime;

/// Where random roots come from: `p/q` with `|p| <= span` and `q` drawn
/// from `denominators`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootGrid {
    pub span: i64,
    pub denominators: Vec<i64>,
    pub max_degree: usize,
    pub max_attempts: usize,
}

impl Default for RootGrid {
    fn default() -> Self {
        Self {
            span: 6,
            denominators: vec![1, 2, 3],
            max_degree: 4,
            max_attempts: 10_000,
        }
    }
}

impl RootGrid {
    fn point(&self, rng: &mut ChaCha8Rng) -> BigRational {
        let num = rng.random_range(-self.span..=self.span);
        let den = self.denominators[rng.random_range(0..self.denominators.len())];
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// `degree` roots laid out as runs of consecutive points.
    fn roots(&self, rng: &mut ChaCha8Rng, degree: usize) -> Vec<ExactScalar> {
        let mut out = Vec::with_capacity(degree);
        while out.len() < degree {
            let start = self.point(rng);
            let len = rng.random_range(1..=(degree - out.len()).min(3));
            for j in 0..len {
                out.push(ExactScalar::rational(
                    &start + BigRational::from_integer(BigInt::from(j)),
                ));
            }
        }
        out
    }
}

/// Returns `m + 1` factored polynomials with `f_1 + ... + f_m = f_(m+1)`,
/// pairwise shifting prime, all of degree at least `m - 1`, with
/// `f_1, ..., f_m` linearly independent. Deterministic per seed.
pub fn gen_mason_instance(m: usize, seed: u64, grid: &RootGrid) -> Result<Vec<FactoredPoly<ExactScalar>>> {
    if m < 2 {
        return Err(Error::InvalidArgument("m must be at least 2".into()));
    }
    if grid.denominators.is_empty() || grid.denominators.contains(&0) || grid.span < 0 {
        return Err(Error::InvalidArgument("invalid root grid".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..grid.max_attempts {
        let candidate = if m <= 3 && rng.random_bool(0.5) {
            cancel_to_quadratic(m, grid, &mut rng)?
        } else {
            prescribed_sum(m, grid, &mut rng)?
        };
        if let Some(fs) = candidate {
            if satisfies_hypotheses(&fs, m)? {
                return Ok(fs);
            }
        }
    }
    Err(Error::SamplingExhausted {
        attempts: grid.max_attempts,
    })
}

fn satisfies_hypotheses(fs: &[FactoredPoly<ExactScalar>], m: usize) -> Result<bool> {
    if fs.iter().any(|f| f.degree() + 1 < m) {
        return Ok(false);
    }
    if pairwise_shifting_prime(fs, Tolerance::Auto)?.is_some() {
        return Ok(false);
    }
    let summands: Vec<Poly<ExactScalar>> = fs[..m].iter().map(FactoredPoly::expand).collect();
    linearly_independent(&summands, Tolerance::Auto)
}

fn monic(roots: &[ExactScalar]) -> Poly<ExactScalar> {
    Poly::from_roots(roots)
}

fn rational_coeff(p: &Poly<ExactScalar>, k: usize) -> BigRational {
    p.coeff(k).as_rational().expect("grid roots are rational")
}

/// Summands of a common degree `d`, leads chosen so that every coefficient
/// above `z^e` cancels (`e <= 2`); the sum then factors exactly.
fn cancel_to_quadratic(
    m: usize,
    grid: &RootGrid,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Vec<FactoredPoly<ExactScalar>>>> {
    let e = rng.random_range((m - 1).max(1)..=2);
    let hi = (e + m - 1).min(grid.max_degree);
    if hi < e + 1 {
        return Ok(None);
    }
    let d = rng.random_range(e + 1..=hi);
    let roots: Vec<Vec<ExactScalar>> = (0..m).map(|_| grid.roots(rng, d)).collect();
    let polys: Vec<Poly<ExactScalar>> = roots.iter().map(|r| monic(r)).collect();
    let rows: Vec<Vec<BigRational>> = (e + 1..=d)
        .map(|k| polys.iter().map(|p| rational_coeff(p, k)).collect())
        .collect();
    let Some(leads) = nonzero_kernel_vector(rows, m, rng) else {
        return Ok(None);
    };
    let leads: Vec<ExactScalar> = leads.into_iter().map(ExactScalar::rational).collect();
    let sum = polys
        .iter()
        .zip(&leads)
        .fold(Poly::zero(), |acc, (p, l)| &acc + &p.scale(l));
    if sum.deg() != Some(e) {
        return Ok(None);
    }
    let Ok(last) = factor(&sum, &[]) else {
        return Ok(None);
    };
    let mut out: Vec<FactoredPoly<ExactScalar>> = leads
        .into_iter()
        .zip(roots)
        .map(|(l, r)| FactoredPoly::new(l, r.into_iter().map(|x| (x, 1))))
        .collect::<Result<_>>()?;
    out.push(last);
    Ok(Some(out))
}

/// Every polynomial of degree `m - 1` with prescribed roots; the `m + 1`
/// leads span the kernel of an `m`-row system.
fn prescribed_sum(m: usize, grid: &RootGrid, rng: &mut ChaCha8Rng) -> Result<Option<Vec<FactoredPoly<ExactScalar>>>> {
    let d = m - 1;
    let roots: Vec<Vec<ExactScalar>> = (0..=m).map(|_| grid.roots(rng, d)).collect();
    let mut polys: Vec<Poly<ExactScalar>> = roots.iter().map(|r| monic(r)).collect();
    polys[m] = -&polys[m];
    let rows: Vec<Vec<BigRational>> = (0..=d)
        .map(|k| polys.iter().map(|p| rational_coeff(p, k)).collect())
        .collect();
    let Some(leads) = nonzero_kernel_vector(rows, m + 1, rng) else {
        return Ok(None);
    };
    Ok(Some(
        leads
            .into_iter()
            .zip(roots)
            .map(|(l, r)| FactoredPoly::new(ExactScalar::rational(l), r.into_iter().map(|x| (x, 1))))
            .collect::<Result<_>>()?,
    ))
}

/// A random kernel vector of `rows` with every entry nonzero.
fn nonzero_kernel_vector(rows: Vec<Vec<BigRational>>, cols: usize, rng: &mut ChaCha8Rng) -> Option<Vec<BigRational>> {
    let basis = kernel(rows, cols);
    if basis.is_empty() {
        return None;
    }
    let mut v = vec![BigRational::zero(); cols];
    for b in &basis {
        let w = BigRational::from_integer(BigInt::from(rng.random_range(1..=5i64)));
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi += &w * bi;
        }
    }
    v.iter().all(|x| !x.is_zero()).then_some(v)
}

/// Basis of the rational null space by reduction to row echelon form.
fn kernel(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free].clone();
            }
            v
        })
        .collect()
}
