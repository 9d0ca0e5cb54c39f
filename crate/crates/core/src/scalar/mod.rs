//! Coefficient fields.
//!
//! Two backends implement [`Scalar`]:
//!
//! * [`ExactScalar`], elements of the multi-quadratic field
//!   `Q(i, sqrt(p1), ..., sqrt(pk))` with exact rational coordinates, and
//! * [`NumericScalar`], arbitrary-precision complex floating point values.
//!
//! Every algorithm in this crate is generic over the backend. Because the
//! backend is a type parameter, two backends can never meet inside a single
//! polynomial.

mod exact;
mod numeric;

pub use exact::{ExactScalar, RadicalKey};
pub use numeric::{NumericScalar, DEFAULT_PRECISION};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::Result;

/// Tolerance for numeric decisions. The exact backend ignores it.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub enum Tolerance {
    /// `2^(-precision/2)` of the value being tested.
    #[default]
    Auto,
    /// A fixed absolute tolerance.
    Abs(f64),
}

/// How a coefficient is rendered inside a polynomial expression.
pub struct CoefficientText {
    pub negative: bool,
    pub magnitude: String,
    /// False when the magnitude needs parentheses next to `*`.
    pub atomic: bool,
}

/// Outcome of an "is this an integer" query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerTest {
    Integer(BigInt),
    NotInteger,
    /// Numeric only: the distance to the nearest integer lies between the
    /// tolerance and its square root.
    Ambiguous,
}

/// Field operations shared by both backends.
///
/// Scalars serialize as their canonical text.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + PartialEq + Serialize + Send + Sync + 'static {
    /// True when equality and zero tests are exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn from_rational(q: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// Structural zero test. Never tolerance based.
    fn is_zero(&self) -> bool;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;

    fn divided(&self, rhs: &Self) -> Result<Self> {
        Ok(self.times(&rhs.inverse()?))
    }

    fn is_one(&self) -> bool {
        self.minus(&Self::one()).is_zero()
    }

    /// A square root in the backend, if one is representable.
    fn sqrt(&self) -> Option<Self>;

    /// Zero test used for numeric decisions (exact backend: structural).
    fn near_zero(&self, tol: Tolerance) -> bool;

    /// The value with real and imaginary parts below `tol` set to zero, for
    /// presenting numeric results (exact backend: unchanged).
    fn denoised(&self, _tol: Tolerance) -> Self {
        self.clone()
    }

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.minus(other).near_zero(tol)
    }

    fn classify_integer(&self, tol: Tolerance) -> IntegerTest;

    /// The integer value, when [`Scalar::classify_integer`] says so.
    fn integer_value(&self, tol: Tolerance) -> Option<BigInt> {
        match self.classify_integer(tol) {
            IntegerTest::Integer(n) => Some(n),
            _ => None,
        }
    }

    /// Rational value, if the scalar is (exactly) rational.
    fn as_rational(&self) -> Option<BigRational>;

    /// `(re, im)` as doubles, for plotting and seeding iterations.
    fn to_f64_pair(&self) -> (f64, f64);

    fn abs_f64(&self) -> f64 {
        let (re, im) = self.to_f64_pair();
        re.hypot(im)
    }

    /// Sign/magnitude split used when printing polynomials.
    fn coefficient_text(&self) -> CoefficientText;

    /// Key used to order roots and shift classes deterministically.
    fn sort_key(&self) -> String {
        self.to_string()
    }
}
