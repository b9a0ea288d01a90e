//! Stem fields `ℚ[x]/(m)` and factorization over them.
//!
//! Elements are stored in the power basis of the generator. Factoring over a
//! stem field goes through Trager's norm method, so it reuses the rational
//! factorizer and inherits its degree cap on the norm.

mod field;
mod poly_over_k;
pub mod trager;

pub use field::{FieldElement, NumberField};
pub use poly_over_k::PolyOverK;
pub use trager::trager_factor;

use crate::error::{Error, Result};
use crate::exact::Polynomial;

/// Factors `f` over the stem field of `m`.
pub fn factor_over_stem_field(m: &Polynomial, f: &Polynomial) -> Result<Vec<(PolyOverK, usize)>> {
    let k = NumberField::new(m)?;
    trager_factor(&PolyOverK::from_rational_poly(&k, f))
}

/// Degrees of the irreducible factors of an irreducible `f` over its own stem
/// field, ascending and repeated by multiplicity. The leading 1 is the
/// factor `x - θ`.
pub fn stem_factor_pattern(f: &Polynomial) -> Result<Vec<usize>> {
    let mut degrees: Vec<usize> = factor_over_stem_field(f, f)?
        .iter()
        .flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap(), *m))
        .collect();
    degrees.sort_unstable();
    Ok(degrees)
}

/// Whether `f` has a root in `k`.
pub fn has_root_in(k: &NumberField, f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::invalid("the zero polynomial has every root"));
    }
    Ok(trager_factor(&PolyOverK::from_rational_poly(k, f))?
        .iter()
        .any(|(g, _)| g.degree() == Some(1)))
}

/// Whether the stem fields of two irreducible polynomials are isomorphic:
/// equal degree and a root of `f1` in the stem field of `f2`.
pub fn fields_isomorphic(f1: &Polynomial, f2: &Polynomial) -> Result<bool> {
    let k1 = NumberField::new(f1)?;
    let k2 = NumberField::new(f2)?;
    if k1.degree() != k2.degree() {
        return Ok(false);
    }
    has_root_in(&k2, k1.min_poly())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn shanks(a: i64) -> Polynomial {
        p(&[-1, -(a + 3), -a, 1])
    }

    #[test]
    fn cubic_patterns() {
        assert_eq!(stem_factor_pattern(&p(&[-5, 0, 0, 1])).unwrap(), vec![1, 2]);
        assert_eq!(stem_factor_pattern(&shanks(1)).unwrap(), vec![1, 1, 1]);
        assert_eq!(stem_factor_pattern(&p(&[-1, -1, 0, 1])).unwrap(), vec![1, 2]);
    }

    #[test]
    fn quintic_patterns() {
        assert_eq!(stem_factor_pattern(&p(&[12, 15, 0, 0, 0, 1])).unwrap(), vec![1, 4]);
        assert_eq!(stem_factor_pattern(&p(&[-1, -1, 0, 0, 0, 1])).unwrap(), vec![1, 4]);
        // x^5 - 2 has Galois group F20: the stem field holds one root only
        assert_eq!(stem_factor_pattern(&p(&[-2, 0, 0, 0, 0, 1])).unwrap(), vec![1, 4]);
        // x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1, the real subfield of Q(ζ11)
        assert_eq!(
            stem_factor_pattern(&p(&[1, 3, -3, -4, 1, 1])).unwrap(),
            vec![1, 1, 1, 1, 1]
        );
        assert_eq!(
            stem_factor_pattern(&p(&[979, 2310, -55, -110, 0, 1])).unwrap(),
            vec![1, 1, 1, 1, 1]
        );
        // x^5 - 5x + 12 is dihedral
        assert_eq!(stem_factor_pattern(&p(&[12, -5, 0, 0, 0, 1])).unwrap(), vec![1, 2, 2]);
    }

    #[test]
    fn roots_in_fields() {
        let k = NumberField::new(&p(&[-2, 0, 1])).unwrap();
        assert!(has_root_in(&k, &p(&[-8, 0, 1])).unwrap());
        assert!(!has_root_in(&k, &p(&[-3, 0, 1])).unwrap());
        assert!(has_root_in(&k, &p(&[-1, 1])).unwrap());
    }

    #[test]
    fn isomorphism_of_stem_fields() {
        assert!(!fields_isomorphic(&shanks(-1), &shanks(1)).unwrap());
        assert!(!fields_isomorphic(&p(&[-2, 0, 0, 1]), &p(&[-5, 0, 0, 1])).unwrap());
        // x^3 - 2 and (x + 1)^3 - 2 define the same field
        assert!(fields_isomorphic(&p(&[-2, 0, 0, 1]), &p(&[-1, 3, 3, 1])).unwrap());
        // x^3 - 2 and x^3 - 4 define the same field (cube root of 4 = θ^2)
        assert!(fields_isomorphic(&p(&[-2, 0, 0, 1]), &p(&[-4, 0, 0, 1])).unwrap());
        assert!(!fields_isomorphic(&p(&[-2, 0, 1]), &p(&[-2, 0, 0, 1])).unwrap());
    }
}
