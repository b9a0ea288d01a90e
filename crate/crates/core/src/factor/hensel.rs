use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Pow};

use super::modp::ModPPolynomial;
use crate::error::{Error, Result};
use crate::exact::int_poly::mod_inverse;
use crate::exact::IntPoly;

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    (a * b).reduce(m)
}

/// One quadratic Hensel step: from `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)` to the
/// same congruences modulo `m2` (any `m | m2 | m²`). `h` must be monic.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m2: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = (f - &(g * h)).reduce(m2);
    let (q, r) = mul_mod(s, &e, m2).div_rem_mod(h, m2);
    let g_new = (&(g + &(t * &e)) + &(&q * g)).reduce(m2);
    let h_new = (h + &r).reduce(m2);

    let b = (&(&(s * &g_new) + &(t * &h_new)) - &IntPoly::one()).reduce(m2);
    let (c, d) = mul_mod(s, &b, m2).div_rem_mod(&h_new, m2);
    let s_new = (s - &d).reduce(m2);
    let t_new = (&(t - &(t * &b)) - &(&c * &g_new)).reduce(m2);
    (g_new, h_new, s_new, t_new)
}

/// Lifts `f ≡ g·h (mod p)` with monic `f`, `g`, `h` to `f ≡ G·H (mod modulus)`.
fn lift_pair(
    f: &IntPoly,
    g: &ModPPolynomial,
    h: &ModPPolynomial,
    modulus: &BigInt,
) -> Result<(IntPoly, IntPoly)> {
    let p = BigInt::from(g.modulus());
    let (one, s, t) = ModPPolynomial::xgcd(g, h);
    if !one.is_one() {
        return Err(Error::invalid("Hensel lifting needs pairwise coprime factors"));
    }
    let (mut g, mut h) = (g.to_int_poly(), h.to_int_poly());
    let (mut s, mut t) = (s.to_int_poly(), t.to_int_poly());
    let mut m = p;
    while &m < modulus {
        let m2 = (&m * &m).min(modulus.clone());
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m2);
        m = m2;
    }
    Ok((g.reduce(modulus), h.reduce(modulus)))
}

fn product_mod_p(p: u64, factors: &[ModPPolynomial]) -> ModPPolynomial {
    factors
        .iter()
        .fold(ModPPolynomial::new(p, vec![1]), |acc, g| acc.mul(g))
}

fn lift_tree(f: &IntPoly, factors: &[ModPPolynomial], modulus: &BigInt) -> Result<Vec<IntPoly>> {
    if factors.len() == 1 {
        return Ok(vec![f.reduce(modulus)]);
    }
    let p = factors[0].modulus();
    let (left, right) = factors.split_at(factors.len() / 2);
    let (g, h) = lift_pair(
        f,
        &product_mod_p(p, left),
        &product_mod_p(p, right),
        modulus,
    )?;
    let mut out = lift_tree(&g, left, modulus)?;
    out.extend(lift_tree(&h, right, modulus)?);
    Ok(out)
}

/// Lifts a factorization modulo `p` to one modulo `p^k`.
///
/// The returned factors are monic with coefficients in `[0, p^k)`, pairwise
/// congruent to the inputs modulo `p`, and their product times `lc(f)` is
/// congruent to `f` modulo `p^k`.
pub fn hensel_lift(f: &IntPoly, factors: &[ModPPolynomial], k: u32) -> Result<Vec<IntPoly>> {
    let Some(first) = factors.first() else {
        return Err(Error::invalid("no factors to lift"));
    };
    let p = first.modulus();
    if factors.iter().any(|g| g.modulus() != p) {
        return Err(Error::invalid("factors taken modulo different primes"));
    }
    if k == 0 {
        return Err(Error::invalid("lifting exponent must be positive"));
    }
    let bp = BigInt::from(p);
    let modulus: BigInt = Pow::pow(&bp, k);
    let lc_inv = mod_inverse(&f.leading_coeff(), &modulus)
        .ok_or_else(|| Error::invalid(format!("{p} divides the leading coefficient")))?;
    let monic_f = f.scale(&lc_inv).reduce(&modulus);

    let monic_factors: Vec<ModPPolynomial> = factors.iter().map(ModPPolynomial::monic).collect();
    if product_mod_p(p, &monic_factors) != ModPPolynomial::from_int_poly(&monic_f, p) {
        return Err(Error::invalid("factors do not multiply to f modulo p"));
    }
    for (i, a) in monic_factors.iter().enumerate() {
        for b in &monic_factors[i + 1..] {
            if !ModPPolynomial::gcd(a, b).is_one() {
                return Err(Error::invalid("Hensel lifting needs pairwise coprime factors"));
            }
        }
    }
    lift_tree(&monic_f, &monic_factors, &modulus)
}

/// `p^k` for the smallest `k` with `p^k > bound`, together with `k`.
pub fn lifting_exponent(p: u64, bound: &BigInt) -> (u32, BigInt) {
    let bp = BigInt::from(p);
    let mut k = 1;
    let mut m = bp.clone();
    while &m <= bound {
        m *= &bp;
        k += 1;
    }
    (k, m)
}

/// Checks `Π factors ≡ monic(f) (mod m)`; used in tests and debug assertions.
pub fn is_lifted_factorization(f: &IntPoly, factors: &[IntPoly], m: &BigInt) -> bool {
    let Some(lc_inv) = mod_inverse(&f.leading_coeff(), m) else {
        return false;
    };
    let prod = factors
        .iter()
        .fold(IntPoly::one(), |acc, g| (&acc * g).reduce(m));
    prod == f.scale(&lc_inv).reduce(m) && factors.iter().all(|g| g.leading_coeff().mod_floor(m).is_one())
}
