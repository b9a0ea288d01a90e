//! Exact decision procedures for non-isogeny of hyperelliptic jacobians.
//!
//! Given two squarefree polynomials `f`, `h` of the same odd prime degree `n`
//! over ℚ, the [`certifier`] decides whether the curves `y² = f(x)` and
//! `y² = h(x)` have provably non-isogenous jacobians, and records every
//! hypothesis it checked. Everything underneath is exact: rational
//! polynomial arithmetic ([`exact`]), factorization over ℚ ([`factor`]),
//! stem fields and Trager factorization ([`number_field`]), Galois group
//! identification for cubics and quintics ([`galois`]), the F₂ permutation
//! module of a root set ([`gf2`]) and j-invariants ([`curves`]).

pub mod certifier;
pub mod cli;
pub mod curves;
pub mod error;
pub mod exact;
pub mod factor;
pub mod galois;
pub mod gf2;
pub mod number_field;

pub use error::{Error, Result};
