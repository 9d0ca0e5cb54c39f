use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_prime::nt_funcs::factorize64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CoefficientText, IntegerTest, Scalar, Tolerance};
use crate::error::{Error, Result};

/// Nesting limit for the denesting square root search.
const SQRT_DEPTH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Generator {
    Sqrt(u64),
    Imag,
}

/// A product of distinct generators `i^e * sqrt(p1) * ... * sqrt(pk)` with
/// `e` in {0, 1} and distinct primes `p1 < ... < pk`.
///
/// Keys are ordered by their generator lists, square roots first (by prime)
/// and `i` last, with a proper prefix sorting first. The empty key is the
/// rational part and always sorts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalKey {
    imag: bool,
    primes: Vec<u64>,
}

impl RadicalKey {
    pub fn is_rational(&self) -> bool {
        !self.imag && self.primes.is_empty()
    }

    pub fn is_imaginary(&self) -> bool {
        self.imag
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// The square-free integer under the root sign.
    pub fn radicand(&self) -> BigUint {
        self.primes.iter().fold(BigUint::one(), |acc, &p| acc * p)
    }

    fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.primes
            .iter()
            .map(|&p| Generator::Sqrt(p))
            .chain(self.imag.then_some(Generator::Imag))
    }

    fn contains(&self, g: Generator) -> bool {
        match g {
            Generator::Imag => self.imag,
            Generator::Sqrt(p) => self.primes.binary_search(&p).is_ok(),
        }
    }

    fn without(&self, g: Generator) -> RadicalKey {
        let mut key = self.clone();
        match g {
            Generator::Imag => key.imag = false,
            Generator::Sqrt(p) => key.primes.retain(|&q| q != p),
        }
        key
    }

    /// `self * other = coeff * key`.
    fn product(&self, other: &RadicalKey) -> (BigInt, RadicalKey) {
        let mut coeff = if self.imag && other.imag {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let mut primes = Vec::with_capacity(self.primes.len() + other.primes.len());
        let (mut a, mut b) = (self.primes.iter().peekable(), other.primes.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&p), Some(&&q)) => match p.cmp(&q) {
                    Ordering::Less => {
                        primes.push(p);
                        a.next();
                    }
                    Ordering::Greater => {
                        primes.push(q);
                        b.next();
                    }
                    Ordering::Equal => {
                        coeff *= p;
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    primes.push(p);
                    a.next();
                }
                (None, Some(&&q)) => {
                    primes.push(q);
                    b.next();
                }
                (None, None) => break,
            }
        }
        (
            coeff,
            RadicalKey {
                imag: self.imag ^ other.imag,
                primes,
            },
        )
    }
}

impl Ord for RadicalKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generators().cmp(other.generators())
    }
}

impl PartialOrd for RadicalKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `Q(i, sqrt(p1), ..., sqrt(pk))` in canonical sparse form.
///
/// The basis is the set of products of distinct generators, which is linearly
/// independent over `Q`, so structural equality is value equality. Square
/// roots of composite square-free numbers are stored as products of prime
/// roots, e.g. `sqrt(6)` is the key `{sqrt(2), sqrt(3)}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    terms: BTreeMap<RadicalKey, BigRational>,
}

impl ExactScalar {
    pub fn from_integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(q: BigRational) -> Self {
        let mut out = Self::default();
        out.accumulate(RadicalKey::default(), q);
        out
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(num.into(), den.into()))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        let mut out = Self::default();
        out.accumulate(
            RadicalKey {
                imag: true,
                primes: Vec::new(),
            },
            BigRational::one(),
        );
        out
    }

    /// `sqrt(n)` for any integer; square factors are pulled out and negative
    /// radicands pick up `i`.
    pub fn sqrt_of_integer(n: &BigInt) -> Result<Self> {
        Self::sqrt_of_rational(&BigRational::from_integer(n.clone()))
    }

    /// Principal square root of a rational: nonnegative real for `q >= 0`,
    /// `i * sqrt(-q)` otherwise.
    pub fn sqrt_of_rational(q: &BigRational) -> Result<Self> {
        if q.is_zero() {
            return Ok(Self::default());
        }
        // sqrt(a/b) = sqrt(a*b)/b
        let num = q.numer().magnitude() * q.denom().magnitude();
        let (root, primes) = square_free_parts(&num)?;
        let coeff = BigRational::new(BigInt::from_biguint(Sign::Plus, root), q.denom().abs());
        let mut out = Self::default();
        out.accumulate(
            RadicalKey {
                imag: q.is_negative(),
                primes,
            },
            coeff,
        );
        Ok(out)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RadicalKey, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn accumulate(&mut self, key: RadicalKey, q: BigRational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + q;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * q)).collect(),
        }
    }

    fn generators(&self) -> BTreeSet<Generator> {
        self.terms.keys().flat_map(|k| k.generators()).collect()
    }

    fn generator_value(g: Generator) -> Self {
        match g {
            Generator::Imag => Self::i(),
            Generator::Sqrt(p) => {
                let mut out = Self::default();
                out.accumulate(
                    RadicalKey {
                        imag: false,
                        primes: vec![p],
                    },
                    BigRational::one(),
                );
                out
            }
        }
    }

    fn generator_square(g: Generator) -> BigRational {
        match g {
            Generator::Imag => -BigRational::one(),
            Generator::Sqrt(p) => BigRational::from_integer(p.into()),
        }
    }

    /// Image under the automorphism sending `g` to `-g`.
    fn conjugate(&self, g: Generator) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), if k.contains(g) { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Writes `self = x + y*g` with `x`, `y` free of `g`.
    fn split(&self, g: Generator) -> (Self, Self) {
        let mut x = Self::default();
        let mut y = Self::default();
        for (k, c) in &self.terms {
            if k.contains(g) {
                y.accumulate(k.without(g), c.clone());
            } else {
                x.accumulate(k.clone(), c.clone());
            }
        }
        (x, y)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.terms.len() == 1 && rhs.terms.len() == 1 {
            let (ka, qa) = self.terms.iter().next().expect("one term");
            let (kb, qb) = rhs.terms.iter().next().expect("one term");
            let (c, key) = ka.product(kb);
            let mut out = Self::default();
            out.accumulate(key, qa * qb * BigRational::from_integer(c));
            return out;
        }
        // Integer numerators over a common denominator: one reduction per
        // output term instead of one per partial product.
        let (na, da) = self.integer_form();
        let (nb, db) = rhs.integer_form();
        let mut sums: BTreeMap<RadicalKey, BigInt> = BTreeMap::new();
        for (ka, xa) in &na {
            for (kb, xb) in &nb {
                let (c, key) = ka.product(kb);
                *sums.entry(key).or_default() += xa * xb * c;
            }
        }
        let den = da * db;
        Self {
            terms: sums
                .into_iter()
                .filter(|(_, n)| !n.is_zero())
                .map(|(k, n)| (k, BigRational::new(n, den.clone())))
                .collect(),
        }
    }

    /// `(numerators, d)` with `self = sum numerator_k * key_k / d`.
    fn integer_form(&self) -> (Vec<(&RadicalKey, BigInt)>, BigInt) {
        let den = self.terms.values().fold(
            BigInt::one(),
            |acc, q| if q.denom().is_one() { acc } else { acc.lcm(q.denom()) },
        );
        let nums = self
            .terms
            .iter()
            .map(|(k, q)| (k, q.numer() * (&den / q.denom())))
            .collect();
        (nums, den)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }

    /// `self + rhs`, or `self - rhs` with `subtract`.
    fn combine(&self, rhs: &Self, subtract: bool) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        for (k, q) in &rhs.terms {
            match out.terms.get_mut(k) {
                Some(c) => {
                    if subtract {
                        *c -= q;
                    } else {
                        *c += q;
                    }
                    if c.is_zero() {
                        out.terms.remove(k);
                    }
                }
                None => {
                    out.terms.insert(k.clone(), if subtract { -q } else { q.clone() });
                }
            }
        }
        out
    }

    fn neg_ref(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    fn sqrt_search(&self, depth: usize) -> Option<Self> {
        if let Some(q) = self.as_rational() {
            return Self::sqrt_of_rational(&q).ok();
        }
        if depth == 0 {
            return None;
        }
        let g = *self.generators().iter().next_back()?;
        let (x, y) = self.split(g);
        let norm = x.mul_ref(&x).add_ref(&y.mul_ref(&y).scale(&-Self::generator_square(g)));
        let r = norm.sqrt_search(depth - 1)?;
        let half = BigRational::new(1.into(), 2.into());
        for r in [r.clone(), r.neg_ref()] {
            let t = x.add_ref(&r).scale(&half);
            if t.is_zero() {
                continue;
            }
            let Some(u) = t.sqrt_search(depth - 1) else {
                continue;
            };
            let Ok(v) = y.divided(&u.scale(&BigRational::from_integer(2.into()))) else {
                continue;
            };
            let candidate = u.add_ref(&v.mul_ref(&Self::generator_value(g)));
            if candidate.mul_ref(&candidate) == *self {
                return Some(candidate);
            }
        }
        None
    }
}

/// `n = root^2 * prod(primes)` with distinct primes.
fn square_free_parts(n: &BigUint) -> Result<(BigUint, Vec<u64>)> {
    let mut root = BigUint::one();
    let mut odd = BTreeSet::new();
    let mut record = |p: u64, e: usize| {
        root *= BigUint::from(p).pow((e / 2) as u32);
        if e % 2 == 1 {
            odd.insert(p);
        }
    };
    let mut rest = n.clone();
    if rest.to_u64().is_none() {
        let mut d: u64 = 2;
        while d < 1 << 16 && rest.to_u64().is_none() {
            let mut e = 0;
            while (&rest % d).is_zero() {
                rest /= d;
                e += 1;
            }
            if e > 0 {
                record(d, e);
            }
            d += if d == 2 { 1 } else { 2 };
        }
    }
    let Some(small) = rest.to_u64() else {
        return Err(Error::RadicandTooLarge(n.to_string()));
    };
    if small > 1 {
        for (p, e) in factorize64(small) {
            record(p, e);
        }
    }
    Ok((root, odd.into_iter().collect()))
}

impl Scalar for ExactScalar {
    const EXACT: bool = true;

    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::from_integer(1)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::rational(BigRational::from_integer(n.clone()))
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::rational(q.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }

    fn times(&self, rhs: &Self) -> Self {
        self.mul_ref(rhs)
    }

    fn negated(&self) -> Self {
        self.neg_ref()
    }

    fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::rational(q.recip()));
        }
        // a * conj(a) drops the generator g; recurse on the smaller field.
        let g = *self.generators().iter().next_back().expect("irrational element");
        let conj = self.conjugate(g);
        let norm = self.mul_ref(&conj);
        Ok(conj.mul_ref(&norm.inverse()?))
    }

    fn sqrt(&self) -> Option<Self> {
        self.sqrt_search(SQRT_DEPTH)
    }

    fn near_zero(&self, _tol: Tolerance) -> bool {
        self.is_zero()
    }

    fn classify_integer(&self, _tol: Tolerance) -> IntegerTest {
        match self.as_rational() {
            Some(q) if q.is_integer() => IntegerTest::Integer(q.to_integer()),
            _ => IntegerTest::NotInteger,
        }
    }

    fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (k, q) = self.terms.iter().next()?;
                k.is_rational().then(|| q.clone())
            }
            _ => None,
        }
    }

    fn coefficient_text(&self) -> CoefficientText {
        let mut terms = self.terms();
        match (terms.next(), terms.next()) {
            (Some((key, q)), None) => {
                let negative = q.numer() < &BigInt::from(0);
                let mag = if negative { -q } else { q.clone() };
                let mut parts = Vec::new();
                if !mag.is_integer() || *mag.numer() != BigInt::from(1) || key.is_rational() {
                    parts.push(if mag.is_integer() {
                        mag.numer().to_string()
                    } else {
                        format!("{}/{}", mag.numer(), mag.denom())
                    });
                }
                if key.is_imaginary() {
                    parts.push("i".into());
                }
                if !key.primes().is_empty() {
                    parts.push(format!("sqrt({})", key.radicand()));
                }
                CoefficientText {
                    negative,
                    magnitude: parts.join("*"),
                    atomic: true,
                }
            }
            _ => CoefficientText {
                negative: false,
                magnitude: self.to_string(),
                atomic: self.is_zero(),
            },
        }
    }

    fn to_f64_pair(&self) -> (f64, f64) {
        let (mut re, mut im) = (0.0, 0.0);
        for (k, q) in &self.terms {
            let v = q.to_f64().unwrap_or(f64::NAN) * k.radicand().to_f64().unwrap_or(f64::NAN).sqrt();
            if k.imag {
                im += v;
            } else {
                re += v;
            }
        }
        (re, im)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, key: &RadicalKey, q: &BigRational) -> fmt::Result {
    write!(f, "{}/{}", q.numer(), q.denom())?;
    if key.imag {
        write!(f, "*i")?;
    }
    if !key.primes.is_empty() {
        write!(f, "*sqrt({})", key.radicand())?;
    }
    Ok(())
}

/// Canonical text: `-3/4 + 1/2*sqrt(2) + 1/1*i*sqrt(6)`; zero prints as `0`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, q)) in self.terms.iter().enumerate() {
            if n == 0 {
                write_term(f, k, q)?;
            } else if q.is_negative() {
                write!(f, " - ")?;
                write_term(f, k, &-q)?;
            } else {
                write!(f, " + ")?;
                write_term(f, k, q)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar {
                Scalar::$inner(self, rhs)
            }
        }
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                Scalar::$inner(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, plus);
forward_binop!(Sub, sub, minus);
forward_binop!(Mul, mul, times);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.neg_ref()
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        self.neg_ref()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

impl serde::Serialize for ExactScalar {
    fn serialize<Ser: serde::Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        serializer.collect_str(self)
    }
}
