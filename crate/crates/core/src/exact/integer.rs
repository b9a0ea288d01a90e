//! Elementary number theory on machine and arbitrary-precision integers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial division bound used by [`squarefree_part`].
pub const DEFAULT_TRIAL_BOUND: u64 = 100_000;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the witness set is exact for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality for arbitrary integers. Inputs beyond 64 bits are refused.
pub fn is_prime(n: &BigInt) -> Result<bool> {
    if n.is_negative() {
        return Ok(false);
    }
    match n.to_u64() {
        Some(v) => Ok(is_prime_u64(v)),
        None => Err(Error::capability(format!(
            "primality of {n} exceeds the 64-bit Miller-Rabin range"
        ))),
    }
}

/// Odd primes in increasing order, starting at 3.
pub fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&p| is_prime_u64(p))
}

pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&p| is_prime_u64(p)).collect()
}

/// Pollard rho (Floyd cycle detection) with a fixed sequence of increments, so
/// runs are reproducible. `n` must be an odd composite.
fn pollard_rho(n: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        let mut iters = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
            iters += 1;
            if iters > 1 << 22 {
                break;
            }
        }
        if d != 1 && d != n {
            return Some(d);
        }
    }
    None
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>) -> bool {
    if n == 1 {
        return true;
    }
    if is_prime_u64(n) {
        out.push(n);
        return true;
    }
    match pollard_rho(n) {
        Some(d) => factor_u64_into(d, out) && factor_u64_into(n / d, out),
        None => false,
    }
}

/// Prime factorization of a nonzero integer as `(prime, exponent)` pairs in
/// increasing prime order. The sign is dropped.
///
/// Trial division runs up to `trial_bound`; a remaining cofactor that fits in
/// 64 bits is finished by Miller–Rabin and Pollard rho. Larger cofactors are
/// reported as [`Error::Unfactored`].
pub fn factor_integer(n: &BigInt, trial_bound: u64) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::invalid("cannot factor zero"));
    }
    let mut m = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += 1,
        None => out.push((p, 1)),
    };
    let mut d = 2u64;
    while d <= trial_bound {
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        while (&m % &bd).is_zero() {
            m /= &bd;
            push(bd.clone(), &mut out);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            // every factor below sqrt(m) was tried
            push(m.clone(), &mut out);
        } else if let Some(small) = m.to_u64() {
            let mut primes = Vec::new();
            if !factor_u64_into(small, &mut primes) {
                return Err(Error::Unfactored(m));
            }
            for p in primes {
                push(BigInt::from(p), &mut out);
            }
        } else {
            return Err(Error::Unfactored(m));
        }
    }
    out.sort();
    Ok(out)
}

/// The squarefree `d` with `N = d·m²`, keeping the sign of `N`.
pub fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    squarefree_part_with_bound(n, DEFAULT_TRIAL_BOUND)
}

pub fn squarefree_part_with_bound(n: &BigInt, trial_bound: u64) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::invalid("squarefree part of zero"));
    }
    let mut d: BigInt = factor_integer(n, trial_bound)?
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .product();
    if n.sign() == Sign::Minus {
        d = -d;
    }
    Ok(d)
}

fn euler_phi(n: u64) -> u64 {
    let mut primes = Vec::new();
    factor_u64_into(n, &mut primes);
    primes.sort_unstable();
    primes.dedup();
    primes.iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// Smallest `k ≥ 1` with `a^k ≡ 1 (mod n)`.
pub fn multiplicative_order(a: i64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid("multiplicative order needs modulus at least 2"));
    }
    let a = (a as i128).rem_euclid(n as i128) as u64;
    if a.gcd(&n) != 1 {
        return Err(Error::invalid(format!("{a} is not a unit modulo {n}")));
    }
    let mut order = euler_phi(n);
    let mut primes = Vec::new();
    factor_u64_into(order, &mut primes);
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        while order % p == 0 && pow_mod(a, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Whether `a` generates `(ℤ/nℤ)*` for an odd prime `n`.
pub fn is_primitive_root(a: i64, n: u64) -> Result<bool> {
    if n < 3 || !is_prime_u64(n) {
        return Err(Error::invalid(format!("{n} is not an odd prime")));
    }
    Ok(multiplicative_order(a, n)? == n - 1)
}

pub fn is_square_integer(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Whether `q` is the square of a rational.
pub fn is_square(q: &BigRational) -> bool {
    is_square_integer(q.numer()) && is_square_integer(q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 5).unwrap(), 4);
        assert_eq!(multiplicative_order(1, 9).unwrap(), 1);
        assert_eq!(multiplicative_order(7, 3).unwrap(), 1);
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(-1, 7).unwrap(), 2);
        assert!(matches!(multiplicative_order(3, 6), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn primitive_roots() {
        assert!(is_primitive_root(2, 3).unwrap());
        assert!(is_primitive_root(2, 5).unwrap());
        assert!(!is_primitive_root(2, 7).unwrap());
        assert!(is_primitive_root(2, 11).unwrap());
        assert!(is_primitive_root(2, 9).is_err());
        assert!(is_primitive_root(2, 2).is_err());
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&big(49)).unwrap(), big(1));
        assert_eq!(squarefree_part(&big(2869)).unwrap(), big(2869));
        assert_eq!(squarefree_part(&big(259_200_000)).unwrap(), big(5));
        assert_eq!(squarefree_part(&big(-12)).unwrap(), big(-3));
        assert!(matches!(squarefree_part(&big(0)), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn factorization_with_rho() {
        // 1000003 · 1000033, both beyond a small trial bound
        let n = big(1_000_003) * big(1_000_033);
        let f = factor_integer(&n, 1000).unwrap();
        assert_eq!(f, vec![(big(1_000_003), 1), (big(1_000_033), 1)]);
        assert_eq!(factor_integer(&big(2869), 10).unwrap(), vec![(big(19), 1), (big(151), 1)]);
    }

    #[test]
    fn unfactorable_cofactor_is_an_error() {
        // product of two 40-bit primes exceeds 64 bits; trial bound tiny
        let p = big(1_099_511_627_791);
        let q = big(1_099_511_627_803);
        let n = &p * &q;
        assert!(matches!(squarefree_part_with_bound(&n, 100), Err(Error::Unfactored(_))));
    }

    #[test]
    fn squares() {
        assert!(is_square(&BigRational::from_integer(big(49))));
        assert!(!is_square(&BigRational::from_integer(big(2869))));
        assert!(is_square(&BigRational::new(big(4), big(9))));
        assert!(!is_square(&BigRational::from_integer(big(-4))));
    }

    #[test]
    fn miller_rabin_small_range() {
        let sieve: Vec<u64> = (0..2000).filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0)).collect();
        let mr: Vec<u64> = (0..2000).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(sieve, mr);
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }
}
