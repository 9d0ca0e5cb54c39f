//! Text front end for polynomials with exact coefficients.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*' unary)*
//! unary    := '-' unary | factor
//! factor   := atom ('^' uint)?
//! atom     := rational | 'i' | 'sqrt' '(' uint ')' | 'z' | '(' expr ')' | func
//! func     := ('ff' | 'rf') '(' expr ',' uint ')' | 'shift' '(' expr ',' int ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! `^` binds tighter than unary minus, so `-z^2` is `-(z^2)`. There is no
//! implicit multiplication: write `2*z`, not `2z`. A factored literal
//! `roots(lead; r1:m1, r2:m2, ...)` enters a polynomial by its roots.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::diffcalc::{falling_power, raising_power, shift};
use crate::error::{Error, Result};
use crate::poly::{FactoredPoly, Poly};
use crate::scalar::ExactScalar;

/// Largest exponent accepted by `^`, `ff` and `rf`.
pub const MAX_EXPONENT: usize = 1000;
/// Largest absolute shift accepted by `shift`.
pub const MAX_SHIFT: i64 = 1_000_000;
/// Largest degree an expression may reach before evaluation is refused.
pub const MAX_DEGREE: usize = 10_000;
/// Longest accepted source text, in bytes.
pub const MAX_INPUT_LEN: usize = 20_000;
/// Deepest nesting of parentheses and unary operators.
pub const MAX_DEPTH: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(BigRational),
    ImaginaryUnit,
    Sqrt(BigInt),
    Z,
    Neg(Box<Expr>),
    /// `e0 ± e1 ± ...`; sums are flat so long inputs stay shallow.
    Sum(Box<Expr>, Vec<(AddOp, Expr)>),
    /// `e0 * e1 * ...`, at least two factors.
    Product(Vec<Expr>),
    Pow(Box<Expr>, usize),
    Falling(Box<Expr>, usize),
    Raising(Box<Expr>, usize),
    Shift(Box<Expr>, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AddOp {
    Plus,
    Minus,
}

/// A parsed command-line input: an expression or a factored literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Expr(Expr),
    Factored { lead: Expr, roots: Vec<(Expr, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    if src.len() > MAX_INPUT_LEN {
        return Err(err(MAX_INPUT_LEN, format!("input longer than {MAX_INPUT_LEN} bytes")));
    }
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = p + 1;
                chars.next();
            }
            let n: BigInt = src[pos..end].parse().expect("digits");
            out.push((pos, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = p + 1;
                chars.next();
            }
            out.push((pos, Tok::Ident(src[pos..end].to_string())));
        } else if "+-*/^(),;:".contains(c) {
            out.push((pos, Tok::Sym(c)));
            chars.next();
        } else {
            return Err(err(pos, format!("unexpected character {c:?}")));
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        err(self.offset(), format!("expected {wanted}, found {}", self.peek()))
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn descend(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(err(self.offset(), "expression nested too deeply"));
        }
        Ok(())
    }

    fn uint(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected("an unsigned integer")),
        }
    }

    fn small_uint(&mut self, cap: usize, what: &str) -> Result<usize> {
        let at = self.offset();
        let n = self.uint()?;
        n.to_usize()
            .filter(|&k| k <= cap)
            .ok_or_else(|| err(at, format!("{what} {n} exceeds {cap}")))
    }

    fn expr(&mut self) -> Result<Expr> {
        let first = self.term()?;
        let mut rest = Vec::new();
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => AddOp::Plus,
                Tok::Sym('-') => AddOp::Minus,
                _ => break,
            };
            self.bump();
            rest.push((op, self.term()?));
        }
        Ok(if rest.is_empty() {
            first
        } else {
            Expr::Sum(Box::new(first), rest)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.unary()?];
        while *self.peek() == Tok::Sym('*') {
            self.bump();
            factors.push(self.unary()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expr::Product(factors)
        })
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            self.descend()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() == Tok::Sym('^') {
            self.bump();
            let k = self.small_uint(MAX_EXPONENT, "exponent")?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                if *self.peek() == Tok::Sym('/') {
                    self.bump();
                    let den_at = self.offset();
                    let d = self.uint()?;
                    if d.is_zero() {
                        return Err(err(den_at, "zero denominator"));
                    }
                    return Ok(Expr::Rational(BigRational::new(n, d)));
                }
                Ok(Expr::Rational(BigRational::from_integer(n)))
            }
            Tok::Sym('(') => {
                self.bump();
                self.descend()?;
                let e = self.expr()?;
                self.depth -= 1;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "z" => Ok(Expr::Z),
                    "i" => Ok(Expr::ImaginaryUnit),
                    "sqrt" => {
                        self.expect_sym('(')?;
                        let n = self.uint()?;
                        self.expect_sym(')')?;
                        Ok(Expr::Sqrt(n))
                    }
                    "ff" | "rf" => {
                        let (e, k) = self.call(|p| p.small_uint(MAX_EXPONENT, "power"))?;
                        Ok(if name == "ff" {
                            Expr::Falling(Box::new(e), k)
                        } else {
                            Expr::Raising(Box::new(e), k)
                        })
                    }
                    "shift" => {
                        let (e, k) = self.call(Parser::signed_shift)?;
                        Ok(Expr::Shift(Box::new(e), k))
                    }
                    _ => Err(err(at, format!("unknown name '{name}'"))),
                }
            }
            _ => Err(self.unexpected("a number, 'z', 'i', 'sqrt', a function or '('")),
        }
    }

    /// `'(' expr ',' <arg> ')'`
    fn call<T>(&mut self, arg: impl FnOnce(&mut Self) -> Result<T>) -> Result<(Expr, T)> {
        self.expect_sym('(')?;
        self.descend()?;
        let e = self.expr()?;
        self.depth -= 1;
        self.expect_sym(',')?;
        let k = arg(self)?;
        self.expect_sym(')')?;
        Ok((e, k))
    }

    fn signed_shift(&mut self) -> Result<i64> {
        let negative = *self.peek() == Tok::Sym('-');
        if negative {
            self.bump();
        }
        let at = self.offset();
        let n = self.uint()?;
        let n = if negative { -n } else { n };
        n.to_i64()
            .filter(|k| k.abs() <= MAX_SHIFT)
            .ok_or_else(|| err(at, format!("shift {n} exceeds {MAX_SHIFT}")))
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => Err(self.unexpected("an operator or end of input")),
        }
    }
}

fn parser(src: &str) -> Result<Parser> {
    Ok(Parser {
        toks: tokenize(src)?,
        pos: 0,
        depth: 0,
    })
}

/// Parses a polynomial expression.
pub fn parse(src: &str) -> Result<Expr> {
    let mut p = parser(src)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses an expression or a `roots(lead; r:m, ...)` literal.
pub fn parse_input(src: &str) -> Result<Input> {
    let mut p = parser(src)?;
    if *p.peek() != Tok::Ident("roots".into()) {
        let e = p.expr()?;
        p.finish()?;
        return Ok(Input::Expr(e));
    }
    p.bump();
    p.expect_sym('(')?;
    let lead = p.expr()?;
    let mut roots = Vec::new();
    if *p.peek() == Tok::Sym(';') {
        p.bump();
        while *p.peek() != Tok::Sym(')') {
            let r = p.expr()?;
            p.expect_sym(':')?;
            let at = p.offset();
            let m = p.small_uint(MAX_EXPONENT, "multiplicity")?;
            if m == 0 {
                return Err(err(at, "multiplicity must be positive"));
            }
            roots.push((r, m));
            if *p.peek() == Tok::Sym(',') {
                p.bump();
            } else {
                break;
            }
        }
    }
    p.expect_sym(')')?;
    p.finish()?;
    Ok(Input::Factored { lead, roots })
}

/// Upper bound on the degree of `e`, saturating.
fn degree_bound(e: &Expr) -> usize {
    match e {
        Expr::Rational(_) | Expr::ImaginaryUnit | Expr::Sqrt(_) => 0,
        Expr::Z => 1,
        Expr::Neg(a) | Expr::Shift(a, _) => degree_bound(a),
        Expr::Sum(first, rest) => rest
            .iter()
            .map(|(_, e)| degree_bound(e))
            .fold(degree_bound(first), usize::max),
        Expr::Product(fs) => fs.iter().map(degree_bound).fold(0, usize::saturating_add),
        Expr::Pow(a, k) | Expr::Falling(a, k) | Expr::Raising(a, k) => degree_bound(a).saturating_mul(*k),
    }
}

/// Evaluates an expression to an exact polynomial; `sqrt(8)` becomes
/// `2*sqrt(2)`.
pub fn eval_expr(e: &Expr) -> Result<Poly<ExactScalar>> {
    let d = degree_bound(e);
    if d > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "expression degree may reach {d}, above the limit {MAX_DEGREE}"
        )));
    }
    eval_unchecked(e)
}

fn eval_unchecked(e: &Expr) -> Result<Poly<ExactScalar>> {
    Ok(match e {
        Expr::Rational(q) => Poly::constant(ExactScalar::rational(q.clone())),
        Expr::ImaginaryUnit => Poly::constant(ExactScalar::i()),
        Expr::Sqrt(n) => Poly::constant(ExactScalar::sqrt_of_integer(n)?),
        Expr::Z => Poly::z(),
        Expr::Neg(a) => -&eval_unchecked(a)?,
        Expr::Sum(first, rest) => {
            let mut acc = eval_unchecked(first)?;
            for (op, e) in rest {
                let t = eval_unchecked(e)?;
                acc = match op {
                    AddOp::Plus => &acc + &t,
                    AddOp::Minus => &acc - &t,
                };
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = Poly::one();
            for e in fs {
                acc = &acc * &eval_unchecked(e)?;
            }
            acc
        }
        Expr::Pow(a, k) => eval_unchecked(a)?.pow(*k),
        Expr::Falling(a, k) => falling_power(&eval_unchecked(a)?, *k),
        Expr::Raising(a, k) => raising_power(&eval_unchecked(a)?, *k),
        Expr::Shift(a, k) => shift(&eval_unchecked(a)?, *k),
    })
}

/// Evaluates an expression that must be constant.
pub fn eval_scalar(e: &Expr) -> Result<ExactScalar> {
    let p = eval_expr(e)?;
    if !p.is_constant() {
        return Err(Error::InvalidArgument(format!("{p} is not a constant")));
    }
    Ok(p.coeff(0))
}

/// A factored literal as a [`FactoredPoly`]; `None` for plain expressions.
pub fn eval_factored(input: &Input) -> Result<Option<FactoredPoly<ExactScalar>>> {
    match input {
        Input::Expr(_) => Ok(None),
        Input::Factored { lead, roots } => {
            let lead = eval_scalar(lead)?;
            let roots = roots
                .iter()
                .map(|(r, m)| Ok((eval_scalar(r)?, *m)))
                .collect::<Result<Vec<_>>>()?;
            FactoredPoly::new(lead, roots).map(Some)
        }
    }
}

/// The polynomial denoted by an input of either form.
pub fn eval_input(input: &Input) -> Result<Poly<ExactScalar>> {
    match input {
        Input::Expr(e) => eval_expr(e),
        Input::Factored { .. } => Ok(eval_factored(input)?.expect("factored").expand()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn ints(c: &[i64]) -> Poly<ExactScalar> {
        Poly::new(c.iter().map(|&x| ExactScalar::from_integer(x)).collect())
    }

    fn poly(src: &str) -> Poly<ExactScalar> {
        eval_expr(&parse(src).unwrap()).unwrap()
    }

    #[test]
    fn falling_power_syntax() {
        assert_eq!(parse("ff(z,3)").unwrap(), Expr::Falling(Box::new(Expr::Z), 3));
        assert_eq!(poly("ff(z,3)"), ints(&[0, 2, -3, 1]));
        assert_eq!(poly("shift(z^2, 1)"), ints(&[1, 2, 1]));
        assert_eq!(poly("rf(z, 2)"), ints(&[0, 1, 1]));
        assert_eq!(poly("shift(z, -3)"), ints(&[-3, 1]));
        let f1 = poly("ff(z + 2/5, 5)");
        let roots: Vec<ExactScalar> = (0..5).map(|j| ExactScalar::ratio(5 * j - 2, 5)).collect();
        assert_eq!(f1, Poly::from_roots(&roots));
        assert!(eval_expr(&parse("ff(ff(z,1000),1000)").unwrap()).is_err());
    }

    #[test]
    fn precedence() {
        assert_eq!(poly("-z^2"), ints(&[0, 0, -1]));
        assert_eq!(poly("2*z - 3*z + 1"), ints(&[1, -1]));
        assert_eq!(poly("(z+1)^2"), ints(&[1, 2, 1]));
        assert_eq!(poly("z - -1"), ints(&[1, 1]));
    }

    #[test]
    fn radicals_normalize() {
        let two_root2 = ExactScalar::from_integer(2).times(&ExactScalar::sqrt_of_integer(&2.into()).unwrap());
        assert_eq!(poly("sqrt(8)"), Poly::constant(two_root2));
        let c = poly("-(1/2)*(sqrt(2)*z^2 - 2*z - sqrt(2))");
        assert_eq!(c.coeff(1), ExactScalar::one());
        assert_eq!(poly("i*i"), ints(&[-1]));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse("z + * 3").unwrap_err(),
            Error::Parse {
                offset: 4,
                message: "expected a number, 'z', 'i', 'sqrt', a function or '(', found '*'".into()
            }
        );
        assert!(matches!(parse("2z"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse("w"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse("z^100000"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse("(z"), Err(Error::Parse { offset: 2, .. })));
        let deep = "(".repeat(10_000) + "z" + &")".repeat(10_000);
        assert!(matches!(parse(&deep), Err(Error::Parse { .. })));
        let long_sum = "z+".repeat(MAX_INPUT_LEN / 2 - 1) + "z";
        assert_eq!(poly(&long_sum), ints(&[0, MAX_INPUT_LEN as i64 / 2]));
        assert!(parse(&"z+".repeat(MAX_INPUT_LEN)).is_err());
        let negs = "-".repeat(10_000) + "z";
        assert!(matches!(parse(&negs), Err(Error::Parse { .. })));
    }

    #[test]
    fn factored_literals() {
        let input = parse_input("roots(1; 0:2, 1:1, 2:1)").unwrap();
        let f = eval_factored(&input).unwrap().unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(eval_input(&input).unwrap(), ints(&[0, 0, 2, -3, 1]));
        let constant = eval_factored(&parse_input("roots(-3)").unwrap()).unwrap().unwrap();
        assert!(constant.is_constant());
        assert!(parse_input("roots(1; 0:0)").is_err());
        assert!(eval_factored(&parse_input("roots(z; 1:1)").unwrap()).is_err());
        assert!(eval_factored(&parse_input("roots(0; 1:1)").unwrap()).is_err());
    }
}
