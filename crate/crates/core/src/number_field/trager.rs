use std::cmp::Ordering;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::Polynomial;
use crate::factor::{canonical_cmp, factor_over_q, is_squarefree, MAX_FACTOR_DEGREE};

use super::field::FieldElement;
use super::poly_over_k::PolyOverK;

/// Shifts `s` tried in order before giving up: 0, 1, -1, 2, -2, ...
const MAX_SHIFTS: usize = 41;

fn shift_sequence() -> impl Iterator<Item = i64> {
    (0..MAX_SHIFTS as i64).map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub(crate) fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Polynomial {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = Polynomial::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Polynomial::from_coeffs(vec![-xs[i].clone(), BigRational::from_integer(1.into())]);
        acc = &(&acc * &lin) + &Polynomial::constant(dd[i].clone());
    }
    acc
}

/// `Norm_{K/ℚ}(f(x - s·θ))` as a rational polynomial, computed by evaluating
/// at `deg(f)·[K:ℚ] + 1` integer points and interpolating.
pub fn shifted_norm(f: &PolyOverK, s: i64) -> Polynomial {
    let k = f.field();
    let total = f.degree().unwrap_or(0) * k.degree();
    let st = &k.generator() * &k.from_int(s);
    let xs: Vec<BigRational> = (0..=total as i64)
        .map(|i| BigRational::from_integer(i.into()))
        .collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x0| f.eval(&(&k.from_rational(x0.clone()) - &st)).norm())
        .collect();
    interpolate(&xs, &ys)
}

fn element_cmp(a: &FieldElement, b: &FieldElement) -> Ordering {
    canonical_cmp(a.repr(), b.repr())
}

/// Orders by degree, then coefficients from the top down.
pub fn poly_over_k_cmp(a: &PolyOverK, b: &PolyOverK) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        a.coeffs()
            .iter()
            .rev()
            .zip(b.coeffs().iter().rev())
            .map(|(x, y)| element_cmp(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Irreducible factors of a monic squarefree `f` over its coefficient field.
fn factor_squarefree(f: &PolyOverK) -> Result<Vec<PolyOverK>> {
    let deg = f.degree().unwrap_or(0);
    if deg <= 1 {
        return Ok(vec![f.clone()]);
    }
    let k = f.field();
    for s in shift_sequence() {
        let norm = shifted_norm(f, s);
        if !is_squarefree(&norm) {
            continue;
        }
        let st = &k.generator() * &k.from_int(s);
        let mut out = Vec::new();
        let mut rest = f.clone();
        for (g, _) in factor_over_q(&norm)?.factors {
            let lifted = PolyOverK::from_rational_poly(k, &g).shift(&st);
            let h = PolyOverK::gcd(&rest, &lifted);
            if h.degree().unwrap_or(0) > 0 {
                rest = rest.exact_div(&h)?.ok_or_else(|| {
                    Error::Inconsistency("gcd failed to divide in norm factorization".into())
                })?;
                out.push(h);
            }
        }
        if rest.degree().unwrap_or(0) != 0 {
            return Err(Error::Inconsistency(format!(
                "norm factors do not account for all of {f}"
            )));
        }
        return Ok(out);
    }
    Err(Error::Inconsistency(format!(
        "no squarefree norm among {MAX_SHIFTS} shifts"
    )))
}

/// Complete factorization of a nonzero `f` over its coefficient field K,
/// by Trager's norm method: monic irreducible factors with multiplicities,
/// sorted by degree then coefficients.
///
/// The norm has degree `deg(f)·[K:ℚ]`; above the rational factorization cap
/// this is a capability error.
pub fn trager_factor(f: &PolyOverK) -> Result<Vec<(PolyOverK, usize)>> {
    let Some(deg) = f.degree() else {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    };
    let total = deg * f.field().degree();
    if total > MAX_FACTOR_DEGREE {
        return Err(Error::capability(format!(
            "norm degree {total} exceeds the factorization cap of {MAX_FACTOR_DEGREE}"
        )));
    }
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for g in factor_squarefree(&part)? {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| poly_over_k_cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Product of a factor list, for reconstruction checks.
pub fn expand(field_poly: &PolyOverK, factors: &[(PolyOverK, usize)]) -> PolyOverK {
    let mut acc = PolyOverK::constant(field_poly.leading_coeff());
    for (g, m) in factors {
        for _ in 0..*m {
            acc = &acc * g;
        }
    }
    acc
}
