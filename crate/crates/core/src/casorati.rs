//! Casoratians: the difference analogue of the Wronskian.
//!
//! Column `i` of the matrix holds `f_i`; row `k` holds either `Δ^k f_i`
//! or `f_i(z + k)`. The two forms differ by unimodular row operations and
//! have the same determinant.

use crate::diffcalc::{delta, shift};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Scalar, Tolerance};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CasoratiForm {
    /// Row `k` is `Δ^k f_i`.
    #[default]
    Delta,
    /// Row `k` is `f_i(z + k)`.
    Shift,
}

/// The `m x m` matrix of polynomials, indexed `[row][column]`.
pub fn casorati_matrix<S: Scalar>(fs: &[Poly<S>], form: CasoratiForm) -> Vec<Vec<Poly<S>>> {
    let m = fs.len();
    let mut rows = Vec::with_capacity(m);
    let mut current: Vec<Poly<S>> = fs.to_vec();
    for k in 0..m {
        match form {
            CasoratiForm::Delta => {
                if k > 0 {
                    current = current.iter().map(delta).collect();
                }
                rows.push(current.clone());
            }
            CasoratiForm::Shift => rows.push(fs.iter().map(|f| shift(f, k as i64)).collect()),
        }
    }
    rows
}

/// Matrices up to this size use cofactor expansion.
const COFACTOR_LIMIT: usize = 4;

/// Determinant over the polynomial ring.
pub fn determinant<S: Scalar>(matrix: &[Vec<Poly<S>>]) -> Result<Poly<S>> {
    if matrix.len() <= COFACTOR_LIMIT {
        Ok(cofactor(matrix))
    } else {
        bareiss(matrix.to_vec())
    }
}

fn cofactor<S: Scalar>(matrix: &[Vec<Poly<S>>]) -> Poly<S> {
    match matrix.len() {
        0 => Poly::one(),
        1 => matrix[0][0].clone(),
        n => {
            let mut out = Poly::zero();
            for col in 0..n {
                if matrix[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly<S>>> = matrix[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &matrix[0][col] * &cofactor(&minor);
                out = if col % 2 == 0 { &out + &term } else { &out - &term };
            }
            out
        }
    }
}

/// Fraction-free elimination; every division is exact.
fn bareiss<S: Scalar>(mut a: Vec<Vec<Poly<S>>>) -> Result<Poly<S>> {
    let n = a.len();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Casoratian of `fs` (at least one polynomial).
pub fn casoratian<S: Scalar>(fs: &[Poly<S>], form: CasoratiForm) -> Result<Poly<S>> {
    if fs.is_empty() {
        return Err(Error::InvalidArgument("casoratian of an empty tuple".into()));
    }
    determinant(&casorati_matrix(fs, form))
}

/// Linear independence over the constants: the Casoratian is not the zero
/// polynomial (numeric backend: not negligible at `tol`).
pub fn linearly_independent<S: Scalar>(fs: &[Poly<S>], tol: Tolerance) -> Result<bool> {
    Ok(!casoratian(fs, CasoratiForm::Delta)?.chop(tol).is_zero())
}

/// Casoratian with column `index` replaced by `fsum = f_1 + ... + f_m`.
///
/// Adding the other columns to column `index` leaves the determinant
/// unchanged, which is checked.
pub fn casoratian_replace<S: Scalar>(fs: &[Poly<S>], index: usize, fsum: &Poly<S>, tol: Tolerance) -> Result<Poly<S>> {
    if index >= fs.len() {
        return Err(Error::InvalidArgument(format!(
            "column {index} out of range for {} polynomials",
            fs.len()
        )));
    }
    let total = fs.iter().fold(Poly::zero(), |acc, f| &acc + f);
    if !total.approx_eq(fsum, tol) {
        return Err(Error::InvalidArgument(format!(
            "{fsum} is not the sum of the tuple ({total})"
        )));
    }
    let mut replaced = fs.to_vec();
    replaced[index] = fsum.clone();
    let out = casoratian(&replaced, CasoratiForm::Delta)?;
    let original = casoratian(fs, CasoratiForm::Delta)?;
    if !out.approx_eq(&original, tol) && !out.approx_eq(&-&original, tol) {
        return Err(Error::CrossCheck(format!(
            "replaced casoratian {out} does not match {original} up to sign"
        )));
    }
    Ok(out)
}
