//! Exact binomial products (`⊙`) and Hadamard products (`∗`) of rational
//! power series over the rationals.
//!
//! The binomial product of `Σ aₙxⁿ` and `Σ bₙxⁿ` is the series whose `n`th
//! coefficient is `Σₖ C(n,k)·aₖ·bₙ₋ₖ`; the Hadamard product is the termwise
//! product `aₙ·bₙ`. Both map rational power series to rational power series.
//! This crate computes them exactly by several independent routes:
//!
//! * [`convolve`]: denominators from resultants of bivariate substitutions,
//!   numerators from a truncated series product.
//! * [`symfun`]: denominators from power sums and Newton's identities.
//! * [`pfrac`]: constant terms of Laurent series via two-term partial
//!   fractions in an auxiliary variable.
//! * [`ratfun::reconstruct_rational`]: linear-system reconstruction from
//!   enough initial coefficients.
//!
//! [`seqlib`] carries the named sequences (Fibonacci, Lucas, Pell, tribonacci,
//! Perrin, Jacobsthal, ...) and a catalog of convolution identities checked by
//! exact equality.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bipoly;
pub mod convolve;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod pfrac;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod seqlib;
pub mod symfun;

pub use bipoly::{BiPoly, Substitution};
pub use convolve::{Method, ProductKind, ProductPlan};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use pfrac::{RatFunField, TPoly};
pub use poly::Poly;
pub use ratfun::{LinearRecurrence, RatFun, Series};
pub use rational::Rational;
