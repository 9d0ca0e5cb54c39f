use std::fmt;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{CoefficientText, ExactScalar, IntegerTest, Scalar, Tolerance};
use crate::error::{Error, Result};

type Float = FBig<HalfEven, 2>;

/// Precision used when a value is created without a precision context.
pub const DEFAULT_PRECISION: usize = 256;
const MIN_PRECISION: usize = 64;

/// Arbitrary-precision complex number.
///
/// Each value carries its own binary precision. Binary operations run at the
/// larger of the two operand precisions.
#[derive(Clone, Debug)]
pub struct NumericScalar {
    re: Float,
    im: Float,
    precision: usize,
}

fn fit(x: Float, precision: usize) -> Float {
    x.with_precision(precision).value()
}

fn to_ibig(n: &BigInt) -> IBig {
    n.to_string().parse().expect("decimal integer")
}

fn from_ibig(n: &IBig) -> BigInt {
    n.to_string().parse().expect("decimal integer")
}

fn abs(x: Float) -> Float {
    if x < Float::ZERO {
        -x
    } else {
        x
    }
}

fn bits_of(n: &BigInt) -> usize {
    (n.bits() as usize).max(MIN_PRECISION)
}

impl NumericScalar {
    pub fn from_f64(re: f64, im: f64, precision: usize) -> Self {
        let precision = precision.max(MIN_PRECISION);
        let conv = |x: f64| fit(Float::try_from(x).unwrap_or(Float::ZERO), precision);
        Self {
            re: conv(re),
            im: conv(im),
            precision,
        }
    }

    pub fn from_rational_with_precision(q: &BigRational, precision: usize) -> Self {
        let precision = precision.max(MIN_PRECISION);
        Self {
            re: rational_to_float(q, precision),
            im: fit(Float::ZERO, precision),
            precision,
        }
    }

    /// Embeds an exact scalar at the given precision.
    pub fn from_exact(x: &ExactScalar, precision: usize) -> Self {
        let precision = precision.max(MIN_PRECISION);
        // a few guard bits for the sum over basis terms
        let work = precision + 16;
        let mut re = fit(Float::ZERO, work);
        let mut im = fit(Float::ZERO, work);
        for (key, q) in x.terms() {
            let root = fit(Float::from(to_ibig(&BigInt::from(key.radicand()))), work).sqrt();
            let term = rational_to_float(q, work) * root;
            if key.is_imaginary() {
                im += term;
            } else {
                re += term;
            }
        }
        Self {
            re: fit(re, precision),
            im: fit(im, precision),
            precision,
        }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn with_precision(&self, precision: usize) -> Self {
        let precision = precision.max(MIN_PRECISION);
        Self {
            re: fit(self.re.clone(), precision),
            im: fit(self.im.clone(), precision),
            precision,
        }
    }

    fn parts(re: Float, im: Float, precision: usize) -> Self {
        Self {
            re: fit(re, precision),
            im: fit(im, precision),
            precision,
        }
    }

    fn abs_float(&self) -> Float {
        self.re.hypot(&self.im)
    }

    fn tolerance(&self, tol: Tolerance) -> Float {
        match tol {
            Tolerance::Auto => Float::from_parts(IBig::ONE, -((self.precision / 2) as isize)),
            Tolerance::Abs(t) => Float::try_from(t).unwrap_or(Float::ZERO),
        }
    }

    /// Absolute value rendered as a double (may underflow to zero).
    pub fn abs(&self) -> f64 {
        self.abs_float().to_f64().value()
    }
}

fn rational_to_float(q: &BigRational, precision: usize) -> Float {
    let num = fit(Float::from(to_ibig(q.numer())), precision);
    let den = fit(Float::from(to_ibig(q.denom())), precision);
    num / den
}

impl PartialEq for NumericScalar {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl Scalar for NumericScalar {
    const EXACT: bool = false;

    fn zero() -> Self {
        Self::from_bigint(&BigInt::zero())
    }

    fn one() -> Self {
        Self::from_bigint(&BigInt::from(1))
    }

    /// Integers are stored exactly.
    fn from_bigint(n: &BigInt) -> Self {
        let precision = bits_of(n);
        Self::parts(Float::from(to_ibig(n)), Float::ZERO, precision)
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::from_rational_with_precision(q, DEFAULT_PRECISION)
    }

    fn is_zero(&self) -> bool {
        self.re == Float::ZERO && self.im == Float::ZERO
    }

    fn plus(&self, rhs: &Self) -> Self {
        let p = self.precision.max(rhs.precision);
        Self::parts(&self.re + &rhs.re, &self.im + &rhs.im, p)
    }

    fn minus(&self, rhs: &Self) -> Self {
        let p = self.precision.max(rhs.precision);
        Self::parts(&self.re - &rhs.re, &self.im - &rhs.im, p)
    }

    fn times(&self, rhs: &Self) -> Self {
        let p = self.precision.max(rhs.precision);
        let w = p + 8;
        let (a, b) = (fit(self.re.clone(), w), fit(self.im.clone(), w));
        let re = &a * &rhs.re - &b * &rhs.im;
        let im = &a * &rhs.im + &b * &rhs.re;
        Self::parts(re, im, p)
    }

    fn negated(&self) -> Self {
        Self {
            re: -self.re.clone(),
            im: -self.im.clone(),
            precision: self.precision,
        }
    }

    fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.precision;
        let w = p + 8;
        let (a, b) = (fit(self.re.clone(), w), fit(self.im.clone(), w));
        let norm = &a * &a + &b * &b;
        Ok(Self::parts(&a / &norm, -(&b / &norm), p))
    }

    fn divided(&self, rhs: &Self) -> Result<Self> {
        let p = self.precision.max(rhs.precision);
        Ok(self.with_precision(p).times(&rhs.with_precision(p).inverse()?))
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let p = self.precision;
        let w = p + 8;
        let (a, b) = (fit(self.re.clone(), w), fit(self.im.clone(), w));
        let r = a.hypot(&b);
        let two = fit(Float::from(2u8), w);
        if a >= Float::ZERO {
            let u = ((&r + &a) / &two).sqrt();
            let v = &b / (&two * &u);
            Some(Self::parts(u, v, p))
        } else {
            let mut v = ((&r - &a) / &two).sqrt();
            if b < Float::ZERO {
                v = -v;
            }
            let u = &b / (&two * &v);
            Some(Self::parts(u, v, p))
        }
    }

    fn near_zero(&self, tol: Tolerance) -> bool {
        self.abs_float() < self.tolerance(tol)
    }

    fn denoised(&self, tol: Tolerance) -> Self {
        let tau = self.tolerance(tol);
        let keep = |x: &Float| {
            if abs(x.clone()) < tau {
                fit(Float::ZERO, self.precision)
            } else {
                x.clone()
            }
        };
        Self::parts(keep(&self.re), keep(&self.im), self.precision)
    }

    fn classify_integer(&self, tol: Tolerance) -> IntegerTest {
        let nearest = self.re.round();
        let dist_re = abs(&self.re - &nearest);
        let dist_im = abs(self.im.clone());
        let dist = if dist_re > dist_im { dist_re } else { dist_im };
        let tau = self.tolerance(tol);
        if dist < tau {
            IntegerTest::Integer(from_ibig(&nearest.to_int().value()))
        } else if dist < fit(tau, self.precision).sqrt() {
            IntegerTest::Ambiguous
        } else {
            IntegerTest::NotInteger
        }
    }

    fn as_rational(&self) -> Option<BigRational> {
        None
    }

    fn coefficient_text(&self) -> CoefficientText {
        let (_, im) = self.to_f64_pair();
        let text = self.to_string();
        // Exact units print as a bare `z^k`.
        let text = if im == 0.0 && (text == "1e0" || text == "-1e0") {
            text.replace("1e0", "1")
        } else {
            text
        };
        match text.strip_prefix('-') {
            Some(rest) if im == 0.0 => CoefficientText {
                negative: true,
                magnitude: rest.to_string(),
                atomic: true,
            },
            _ => CoefficientText {
                negative: false,
                atomic: im == 0.0,
                magnitude: text,
            },
        }
    }

    fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64().value(), self.im.to_f64().value())
    }
}

fn write_decimal(f: &mut fmt::Formatter<'_>, x: &Float, digits: usize) -> fmt::Result {
    if *x == Float::ZERO {
        return write!(f, "0");
    }
    let d = x.to_decimal().value().with_precision(digits).value();
    write!(f, "{d:e}")
}

/// `re + im*i` in scientific decimal notation, with as many significant
/// digits as the binary precision supports.
impl fmt::Display for NumericScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.precision as f64 * std::f64::consts::LOG10_2).floor() as usize;
        write_decimal(f, &self.re, digits)?;
        if self.im != Float::ZERO {
            if self.im < Float::ZERO {
                write!(f, " - ")?;
                write_decimal(f, &-self.im.clone(), digits)?;
            } else {
                write!(f, " + ")?;
                write_decimal(f, &self.im, digits)?;
            }
            write!(f, "*i")?;
        }
        Ok(())
    }
}

impl serde::Serialize for NumericScalar {
    fn serialize<Ser: serde::Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_the_larger_precision() {
        let a = NumericScalar::from_f64(1.5, 0.0, 256);
        let b = NumericScalar::from_bigint(&3.into());
        assert_eq!(a.plus(&b).precision(), 256);
        assert_eq!(b.times(&a).precision(), 256);
        assert!(NumericScalar::from_f64(1.0, 0.0, 8).precision() >= 64);
    }

    #[test]
    fn exact_embedding_of_root_two() {
        let x = NumericScalar::from_exact(&ExactScalar::sqrt_of_integer(&2.into()).unwrap(), 256);
        let sq = x.times(&x).minus(&NumericScalar::from_bigint(&2.into()));
        assert!(sq.abs() < 1e-70);
    }

    #[test]
    fn complex_sqrt_and_inverse() {
        let z = NumericScalar::from_f64(-3.0, 4.0, 128);
        let r = z.sqrt().unwrap();
        assert!(r.times(&r).minus(&z).abs() < 1e-30);
        let inv = z.inverse().unwrap();
        assert!(inv.times(&z).minus(&NumericScalar::one()).abs() < 1e-30);
        assert!(NumericScalar::zero().inverse().is_err());
    }

    #[test]
    fn integer_classification_bands() {
        let near = NumericScalar::from_f64(3.0, 0.0, 256).plus(&NumericScalar::from_f64(1e-60, 0.0, 256));
        assert_eq!(near.classify_integer(Tolerance::Auto), IntegerTest::Integer(3.into()));
        let fuzzy = NumericScalar::from_f64(3.0, 1e-30, 256);
        assert_eq!(fuzzy.classify_integer(Tolerance::Auto), IntegerTest::Ambiguous);
        let far = NumericScalar::from_f64(3.5, 0.0, 256);
        assert_eq!(far.classify_integer(Tolerance::Auto), IntegerTest::NotInteger);
    }
}
