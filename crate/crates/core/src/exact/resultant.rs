use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::int_poly::IntPoly;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Resultant of two integer polynomials by the subresultant PRS.
///
/// Follows the classical sub-resultant algorithm: contents are removed up
/// front, and each pseudo-remainder is divided by `g·h^δ` so intermediate
/// coefficients stay polynomially bounded.
pub fn int_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    if da == 0 {
        return Pow::pow(a.leading_coeff(), db as u32);
    }
    if db == 0 {
        return Pow::pow(b.leading_coeff(), da as u32);
    }

    let ca = a.content();
    let cb = b.content();
    let mut a = a.div_scalar(&ca);
    let mut b = b.div_scalar(&cb);
    let t = Pow::pow(ca, db as u32) * Pow::pow(cb, da as u32);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut s = BigInt::one();

    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }

    loop {
        let deg_a = a.degree().unwrap();
        let deg_b = b.degree().unwrap();
        let delta = deg_a - deg_b;
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g * Pow::pow(&h, delta as u32);
        b = r.div_scalar(&divisor);
        g = a.leading_coeff();
        // h <- h^(1-δ) g^δ
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => Pow::pow(&g, delta as u32) / Pow::pow(&h, (delta - 1) as u32),
        };
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => {
                let deg_a = a.degree().unwrap() as u32;
                let lb = b.leading_coeff();
                // h <- h^(1-deg A) lb^(deg A)
                let h_final = if deg_a == 0 {
                    h
                } else {
                    Pow::pow(&lb, deg_a) / Pow::pow(&h, deg_a - 1)
                };
                return s * t * h_final;
            }
            Some(_) => {}
        }
    }
}

/// `Res(f, g)` for polynomials over ℚ.
pub fn resultant(f: &Polynomial, g: &Polynomial) -> Result<BigRational> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::invalid("resultant of two zero polynomials"));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(BigRational::zero());
    }
    let df = f.degree().unwrap() as u32;
    let dg = g.degree().unwrap() as u32;
    let (cf, pf) = f.primitive_part();
    let (cg, pg) = g.primitive_part();
    // Res(c·F, d·G) = c^deg G · d^deg F · Res(F, G)
    let r = BigRational::from_integer(int_resultant(&pf, &pg));
    Ok(r * Pow::pow(cf, dg) * Pow::pow(cg, df))
}

/// `disc(f) = (−1)^(n(n−1)/2) · Res(f, f′) / lc(f)`.
pub fn discriminant(f: &Polynomial) -> Result<BigRational> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::invalid("discriminant needs degree at least 2")),
    };
    let r = resultant(f, &f.derivative())? / f.leading_coeff();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}
