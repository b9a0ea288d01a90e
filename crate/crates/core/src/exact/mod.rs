//! Exact scalars and dense univariate polynomials over ℚ.
//!
//! Integers and rationals are `num-bigint`/`num-rational` values; this module
//! adds the polynomial layer, resultants, discriminants and the small amount
//! of elementary number theory the rest of the crate needs.

pub mod int_poly;
pub mod integer;
pub mod poly;
pub mod resultant;

pub use int_poly::IntPoly;
pub use integer::{
    factor_integer, is_prime, is_prime_u64, is_primitive_root, is_square, multiplicative_order,
    squarefree_part, squarefree_part_with_bound,
};
pub use num_bigint::BigInt as Integer;
pub use num_rational::BigRational as Rational;
pub use poly::{format_rational, Polynomial};
pub use resultant::{discriminant, resultant};
