use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::hensel::{hensel_lift, lifting_exponent};
use super::modp::{factor_mod_p, ModPPolynomial};
use crate::error::Result;
use crate::exact::integer::odd_primes;
use crate::exact::IntPoly;

/// How many admissible primes are tried before settling on the one with the
/// fewest modular factors.
const PRIME_CANDIDATES: usize = 6;

/// Landau–Mignotte bound `⌈2^deg(f) · ‖f‖₂ · |lc(f)|⌉` on the coefficients of
/// any integer factor of `f`.
pub fn mignotte_bound(f: &IntPoly) -> BigInt {
    let Some(d) = f.degree() else {
        return BigInt::zero();
    };
    let lc = f.leading_coeff();
    let radicand: BigInt = Pow::pow(BigInt::from(4), d as u32) * f.norm_sq() * &lc * &lc;
    let root = radicand.sqrt();
    if &root * &root == radicand {
        root
    } else {
        root + 1
    }
}

/// Picks a prime for the modular image of a monic squarefree `f`: among the
/// first admissible odd primes (those keeping `f mod p` squarefree), the one
/// giving the fewest irreducible factors, smallest prime on ties.
fn choose_prime(f: &IntPoly) -> Result<(u64, Vec<ModPPolynomial>)> {
    let mut best: Option<(u64, Vec<ModPPolynomial>)> = None;
    let mut tried = 0;
    for p in odd_primes() {
        let fp = ModPPolynomial::from_int_poly(f, p);
        if fp.degree() != f.degree() || !ModPPolynomial::gcd(&fp, &fp.derivative()).is_one() {
            continue;
        }
        let factors: Vec<ModPPolynomial> = factor_mod_p(&fp)?.into_iter().map(|(g, _)| g).collect();
        if factors.len() == 1 {
            return Ok((p, factors));
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == PRIME_CANDIDATES {
            break;
        }
    }
    Ok(best.expect("some prime is admissible for a squarefree polynomial"))
}

/// Visits every `k`-subset of `0..n` in lexicographic order until `visit`
/// returns true; returns that subset.
fn find_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return Some(idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Irreducible factors over ℤ of a monic squarefree integer polynomial, by
/// Zassenhaus: modular factorization, Hensel lifting past twice the
/// Mignotte bound, and recombination by subsets of increasing size.
pub(crate) fn factor_monic_squarefree(f: &IntPoly) -> Result<Vec<IntPoly>> {
    debug_assert!(f.leading_coeff().is_one());
    if f.degree().unwrap_or(0) <= 1 {
        return Ok(vec![f.clone()]);
    }
    let (p, modular) = choose_prime(f)?;
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let bound = mignotte_bound(f) * 2;
    let (k, modulus) = lifting_exponent(p, &bound);
    let mut pool: Vec<IntPoly> = hensel_lift(f, &modular, k)?
        .into_iter()
        .map(|g| g.symmetric(&modulus))
        .collect();

    let mut remaining = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let target_tail = remaining.coeff(0);
        let mut hit: Option<(IntPoly, IntPoly)> = None;
        let subset = find_subset(pool.len(), size, |idx| {
            let candidate = idx
                .iter()
                .fold(IntPoly::one(), |acc, &i| (&acc * &pool[i]).symmetric(&modulus));
            let tail = candidate.coeff(0);
            if !target_tail.is_zero() && (tail.is_zero() || !(&target_tail % &tail).is_zero()) {
                return false;
            }
            match remaining.div_exact(&candidate) {
                Some(q) => {
                    hit = Some((candidate, q));
                    true
                }
                None => false,
            }
        });
        match (subset, hit) {
            (Some(idx), Some((g, q))) => {
                found.push(g);
                remaining = q;
                for &i in idx.iter().rev() {
                    pool.remove(i);
                }
            }
            _ => size += 1,
        }
    }
    if remaining.degree().unwrap_or(0) > 0 {
        found.push(remaining);
    }
    Ok(found)
}

/// Irreducible factors over ℤ of a primitive squarefree integer polynomial
/// with positive leading coefficient. Each factor is primitive with positive
/// leading coefficient.
pub(crate) fn factor_primitive_squarefree(f: &IntPoly) -> Result<Vec<IntPoly>> {
    let n = f.degree().expect("nonzero");
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    if f.coeff(0).is_zero() {
        let rest = IntPoly::from_coeffs(f.coeffs()[1..].to_vec());
        let mut out = vec![IntPoly::from_i64(&[0, 1])];
        out.extend(factor_primitive_squarefree(&rest)?);
        return Ok(out);
    }
    let lc = f.leading_coeff();
    if lc.is_one() {
        return factor_monic_squarefree(f);
    }
    // F(x) = lc^(n-1) f(x / lc) is monic; a factor G of F gives pp(G(lc·x)).
    let monic = IntPoly::from_coeffs(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i == n {
                    BigInt::one()
                } else {
                    c * Pow::pow(&lc, (n - 1 - i) as u32)
                }
            })
            .collect(),
    );
    Ok(factor_monic_squarefree(&monic)?
        .into_iter()
        .map(|g| {
            let back = IntPoly::from_coeffs(
                g.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * Pow::pow(&lc, i as u32))
                    .collect(),
            )
            .primitive();
            if back.leading_coeff().is_negative() {
                -&back
            } else {
                back
            }
        })
        .collect())
}
