//! Factorization of univariate polynomials over ℚ.
//!
//! The pipeline is the classical one: Yun squarefree decomposition, then for
//! each squarefree part a Berlekamp factorization modulo a small prime,
//! quadratic Hensel lifting, and Zassenhaus recombination.

pub mod hensel;
pub mod modp;
pub mod zassenhaus;

use std::cmp::Ordering;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::Polynomial;

pub use hensel::hensel_lift;
pub use modp::{degree_pattern_mod_p, factor_mod_p, is_irreducible_mod_p, ModPPolynomial};
pub use zassenhaus::mignotte_bound;

/// Inputs above this degree are refused with a capability error.
pub const MAX_FACTOR_DEGREE: usize = 32;

/// `unit · Π factorᵢ^multᵢ`, each factor monic and irreducible over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub unit: BigRational,
    pub factors: Vec<(Polynomial, usize)>,
}

impl FactorList {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Polynomial {
        self.factors.iter().fold(
            Polynomial::constant(self.unit.clone()),
            |acc, (g, m)| &acc * &g.pow(*m as u32),
        )
    }

    /// True when the input was irreducible: a single factor of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap(), *m))
            .collect()
    }
}

/// Orders polynomials by degree, then by coefficients from the top down.
pub fn canonical_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Complete factorization over ℚ.
pub fn factor_over_q(f: &Polynomial) -> Result<FactorList> {
    let Some(deg) = f.degree() else {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    };
    if deg > MAX_FACTOR_DEGREE {
        return Err(Error::capability(format!(
            "degree {deg} exceeds the factorization cap of {MAX_FACTOR_DEGREE}"
        )));
    }
    let unit = f.leading_coeff();
    let mut factors = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        let (_, prim) = part.primitive_part();
        for g in zassenhaus::factor_primitive_squarefree(&prim)? {
            factors.push((Polynomial::from_int_poly(&g).monic(), mult));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(FactorList { unit, factors })
}

/// Whether `f` has no repeated roots, i.e. `gcd(f, f′)` is constant.
pub fn is_squarefree(f: &Polynomial) -> bool {
    if f.is_zero() {
        return false;
    }
    Polynomial::gcd(f, &f.derivative()).is_constant()
}

/// Whether `f` is irreducible over ℚ (degree at least one, no proper factor).
pub fn is_irreducible(f: &Polynomial) -> Result<bool> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    Ok(factor_over_q(f)?.is_irreducible())
}
