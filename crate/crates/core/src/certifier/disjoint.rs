use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{discriminant, squarefree_part, Polynomial};
use crate::galois::{galois_group, group_properties, GaloisGroupId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisjointRule {
    /// `Gal(h)` cyclic of order n, `Gal(f)` doubly transitive.
    R1,
    /// `R1` with the roles of `f` and `h` swapped.
    R2,
    /// One group S5, the other F20, with different quadratic subfields
    /// `ℚ(√disc)` of the splitting fields.
    R3,
}

impl fmt::Display for DisjointRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisjointnessResult {
    Disjoint(DisjointRule),
    NotDisjoint(String),
    Unknown,
}

/// Linear disjointness of the splitting fields of two irreducible cubics or
/// quintics of the same degree.
pub fn prove_linear_disjointness(f: &Polynomial, h: &Polynomial) -> Result<DisjointnessResult> {
    if f.degree() != h.degree() {
        return Err(Error::invalid("disjointness is tested for equal degrees only"));
    }
    let gf = galois_group(f)?;
    let gh = galois_group(h)?;
    if gf == GaloisGroupId::Reducible || gh == GaloisGroupId::Reducible {
        return Err(Error::invalid("disjointness is tested for irreducible polynomials"));
    }
    disjointness(f, gf, h, gh)
}

/// Squarefree part of `num·den` of the discriminant; it determines the
/// quadratic field `ℚ(√disc)`.
fn squarefree_disc(f: &Polynomial) -> Result<num_bigint::BigInt> {
    let d = discriminant(f)?;
    squarefree_part(&(d.numer() * d.denom()))
}

/// Rules R0–R3 in order, given already identified groups.
pub(crate) fn disjointness(
    f: &Polynomial,
    gf: GaloisGroupId,
    h: &Polynomial,
    gh: GaloisGroupId,
) -> Result<DisjointnessResult> {
    if f.monic() == h.monic() {
        return Ok(DisjointnessResult::NotDisjoint(format!(
            "{} and {} have the same splitting field",
            f.monic(),
            h.monic()
        )));
    }
    let pf = group_properties(gf)?;
    let ph = group_properties(gh)?;
    if ph.cyclic_of_order_n && pf.doubly_transitive {
        return Ok(DisjointnessResult::Disjoint(DisjointRule::R1));
    }
    if pf.cyclic_of_order_n && ph.doubly_transitive {
        return Ok(DisjointnessResult::Disjoint(DisjointRule::R2));
    }
    use GaloisGroupId::{F20, S5};
    if matches!((gf, gh), (S5, F20) | (F20, S5)) {
        let df = squarefree_disc(f)?;
        let dh = squarefree_disc(h)?;
        if df != dh {
            return Ok(DisjointnessResult::Disjoint(DisjointRule::R3));
        }
    }
    Ok(DisjointnessResult::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn rule_examples() {
        let x3_5 = p(&[-5, 0, 0, 1]);
        let shanks = p(&[-1, -2, 1, 1]);
        assert_eq!(
            prove_linear_disjointness(&x3_5, &shanks).unwrap(),
            DisjointnessResult::Disjoint(DisjointRule::R1)
        );
        assert_eq!(
            prove_linear_disjointness(&shanks, &x3_5).unwrap(),
            DisjointnessResult::Disjoint(DisjointRule::R2)
        );
        assert!(matches!(
            prove_linear_disjointness(&x3_5, &x3_5).unwrap(),
            DisjointnessResult::NotDisjoint(_)
        ));
        assert_eq!(
            prove_linear_disjointness(&p(&[-1, -1, 0, 0, 0, 1]), &p(&[12, 15, 0, 0, 0, 1])).unwrap(),
            DisjointnessResult::Disjoint(DisjointRule::R3)
        );
        // S3 against S3: no rule
        assert_eq!(
            prove_linear_disjointness(&x3_5, &p(&[-2, 0, 0, 1])).unwrap(),
            DisjointnessResult::Unknown
        );
    }

    #[test]
    fn r3_needs_distinct_quadratic_subfields() {
        // x^5 - 2 is F20 with discriminant 50000 = 2^4 5^5, squarefree part 5,
        // the same as x^5 + 15x + 12, but both are F20 so R3 does not apply
        assert_eq!(
            prove_linear_disjointness(&p(&[-2, 0, 0, 0, 0, 1]), &p(&[12, 15, 0, 0, 0, 1])).unwrap(),
            DisjointnessResult::Unknown
        );
        // S5 x^5 - x - 1 (2869) against F20 x^5 - 2 (5): different subfields
        assert_eq!(
            prove_linear_disjointness(&p(&[-1, -1, 0, 0, 0, 1]), &p(&[-2, 0, 0, 0, 0, 1])).unwrap(),
            DisjointnessResult::Disjoint(DisjointRule::R3)
        );
    }
}
