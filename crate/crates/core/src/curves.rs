//! j-invariants of elliptic curves `y² = f(x)` with `f` a squarefree cubic,
//! and genus bookkeeping for `y² = f(x)` in general.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::Polynomial;

/// The j-invariants `0 = j(ℤ[ζ₃])`, `2⁴·3³·5³ = 54000` and
/// `−2¹⁵·3·5³ = −12288000`: the rational j-invariants of curves whose
/// geometric endomorphism algebra is `ℚ(√−3)`.
pub const S: [i64; 3] = [0, 54000, -12_288_000];

/// `y² = x³ + a·x + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortWeierstrass {
    pub a: BigRational,
    pub b: BigRational,
}

impl ShortWeierstrass {
    pub fn j_invariant(&self) -> BigRational {
        let a3 = Pow::pow(&self.a, 3u32);
        let six912 = BigRational::from_integer(6912.into());
        let den = &a3 * BigRational::from_integer(4.into())
            + Pow::pow(&self.b, 2u32) * BigRational::from_integer(27.into());
        six912 * a3 / den
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// A short Weierstrass model isomorphic over ℚ̄ to `y² = f(x)`.
///
/// With `f = c₃x³ + c₂x² + c₁x + c₀`, scaling `(x, y) ↦ (X/c₃, Y/c₃)` gives
/// the monic `Y² = X³ + c₂X² + c₁c₃X + c₀c₃²`, which is then depressed.
pub fn short_weierstrass(f: &Polynomial) -> Result<ShortWeierstrass> {
    if f.degree() != Some(3) {
        return Err(Error::invalid(format!("{f} is not a cubic")));
    }
    let c3 = f.coeff(3);
    let p = f.coeff(2);
    let q = f.coeff(1) * &c3;
    let r = f.coeff(0) * &c3 * &c3;
    let a = &q - &p * &p / rat(3);
    let b = Pow::pow(&p, 3u32) * rat(2) / rat(27) - &p * &q / rat(3) + r;
    if (Pow::pow(&a, 3u32) * rat(4) + Pow::pow(&b, 2u32) * rat(27)).is_zero() {
        return Err(Error::invalid(format!("{f} has a repeated root")));
    }
    Ok(ShortWeierstrass { a, b })
}

pub fn j_invariant(f: &Polynomial) -> Result<BigRational> {
    Ok(short_weierstrass(f)?.j_invariant())
}

pub fn in_s(j: &BigRational) -> bool {
    S.iter().any(|&s| *j == BigRational::from_integer(BigInt::from(s)))
}

/// Genus `(n − 1)/2` of `y² = f(x)` for squarefree `f` of odd degree `n`.
pub fn genus(n: u64) -> Result<u64> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::invalid(format!("genus formula needs odd n ≥ 3, got {n}")));
    }
    Ok((n - 1) / 2)
}
