//! Dense univariate polynomials over a [`Scalar`] field.

mod factored;
mod roots;

pub use factored::{classical_rad, FactoredPoly};
pub use roots::{factor, factor_with, RootSolver};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tolerance};

/// Degree of a polynomial. The zero polynomial has degree `-inf`, which
/// sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Coefficients in ascending powers of `z`; the leading coefficient is
/// nonzero and the zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::new(vec![S::zero(), S::one()])
    }

    /// `z - root`.
    pub fn linear(root: &S) -> Self {
        Self::new(vec![root.negated(), S::one()])
    }

    pub fn monomial(c: S, power: usize) -> Self {
        let mut coeffs = vec![S::zero(); power];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Monic polynomial with the given roots (repeated as listed).
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a S>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> S {
        self.coeffs.get(power).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn lead(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.lead().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(&lead.inverse()?))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.times(&S::from_bigint(&BigInt::from(k))))
                .collect(),
        )
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.lead().ok_or(Error::DivisionByZero)?;
        let inv = lead.inverse()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![S::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].times(&inv);
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].minus(&c.times(d));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder {
                remainder: r.to_string(),
            })
        }
    }

    /// Like [`Poly::div_exact`], but remainders whose coefficients are all
    /// negligible at `tol` are accepted (numeric backend).
    pub fn div_exact_tol(&self, divisor: &Self, tol: Tolerance) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.coeffs.iter().all(|c| c.near_zero(tol)) {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder {
                remainder: r.to_string(),
            })
        }
    }

    /// Trims trailing coefficients that are negligible at `tol`.
    pub fn chop(&self, tol: Tolerance) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.near_zero(tol)) {
            coeffs.pop();
        }
        Self::new(coeffs)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    ///
    /// `gcd(p, 0)` is `monic(p)`; both arguments zero is an error.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.gcd_tol(other, Tolerance::Auto)
    }

    pub fn gcd_tol(&self, other: &Self, tol: Tolerance) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        if !b.is_zero() {
            b = b.monic()?;
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // Monic remainders keep coefficient growth in check.
            b = r.chop(tol);
            if !b.is_zero() {
                b = b.monic()?;
            }
        }
        a.monic()
    }

    /// Coefficientwise equality up to `tol` (exact backend: equality).
    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        (self - other).coeffs.iter().all(|c| c.near_zero(tol))
    }

    /// Largest absolute value among the coefficients.
    pub fn coeff_sup(&self) -> f64 {
        self.coeffs.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).plus(&rhs.coeff(k))).collect())
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).minus(&rhs.coeff(k))).collect())
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Poly::new(out)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(Scalar::negated).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: Poly<S>) -> Poly<S> {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

/// Expression syntax, highest power first: `z^4 - 3*z^3 + 2*z^2`.
impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.coefficient_text();
            let sign = match (first, text.negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let coeff = if text.atomic {
                text.magnitude.clone()
            } else {
                format!("({})", text.magnitude)
            };
            let var = match k {
                0 => String::new(),
                1 => "z".into(),
                _ => format!("z^{k}"),
            };
            let body = match (k, text.magnitude.as_str()) {
                (0, _) => coeff,
                (_, "1") => var,
                _ => format!("{coeff}*{var}"),
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}
