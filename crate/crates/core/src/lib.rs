//! Exact forward-difference calculus for univariate polynomials.
//!
//! The forward difference `Δf(z) = f(z+1) - f(z)` plays the role of the
//! derivative, and falling factorial powers `z(z-1)...(z-n+1)` play the
//! role of `z^n`. A zero `z0` of `P` has *height* `n` when `P` vanishes at
//! `z0, z0+1, ..., z0+n-1` but not at `z0+n`. Grouping the zeros of `P`
//! into such runs (chains) gives difference analogues of the radical,
//! of `gcd(P, P')` and of the Mason–Stothers inequality.
//!
//! * [`scalar`]: exact arithmetic in `Q(i, sqrt(p1), ..., sqrt(pk))` and
//!   arbitrary-precision complex floats behind one [`scalar::Scalar`] trait.
//! * [`poly`]: dense and factored polynomials, Euclidean gcd, root finding.
//! * [`diffcalc`]: `Δ`, shifts, falling and raising powers, Newton series.
//! * [`shiftcalc`]: heights, chain decompositions, difference radicals,
//!   gcd towers and common shifting divisors.
//! * [`casorati`]: Casoratian determinants and linear independence.
//! * [`theorems`]: checkers for Mason- and Fermat-type statements in
//!   difference form, a seeded instance generator and worked instances.
//! * [`parser`]: a small expression language for polynomials.
//!
//! ```
//! use diffrad::parser::{eval_factored, parse_input};
//! use diffrad::shiftcalc::{chain_decomposition, rad_delta};
//!
//! // z^2 (z-1)(z-2): the zeros 0, 1, 2 and a second zero at 0.
//! let input = parse_input("roots(1; 0:2, 1:1, 2:1)").unwrap();
//! let p = eval_factored(&input).unwrap().unwrap();
//! let chains = chain_decomposition(&p).unwrap();
//! assert_eq!(chains.chains.len(), 2);
//! assert_eq!(rad_delta(&p).unwrap().to_string(), "z^2");
//! ```

pub mod casorati;
pub mod diffcalc;
pub mod error;
mod json;
pub mod parser;
pub mod poly;
pub mod scalar;
pub mod shiftcalc;
pub mod theorems;

pub use error::{Error, Result};
