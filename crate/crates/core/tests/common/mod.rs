//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use isocert::exact::Polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn random_int_coeffs(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> Vec<i64> {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[degree] == 0 {
        c[degree] = rng.gen_range(-bound..=bound);
    }
    c
}

pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> BigRational {
    BigRational::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound).into())
}

pub fn random_rational_poly(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> Polynomial {
    let mut c: Vec<BigRational> = (0..=degree).map(|_| random_rational(rng, bound)).collect();
    while c[degree].is_zero() {
        c[degree] = random_rational(rng, bound);
    }
    Polynomial::from_coeffs(c)
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `Res(f, g)` as the determinant of the Sylvester matrix; coefficients
/// are listed from the constant term up and both degrees are positive.
pub fn sylvester_resultant(f: &[i64], g: &[i64]) -> BigInt {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[i + k] = BigInt::from(*c);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[i + k] = BigInt::from(*c);
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).collect()
}

fn eval(c: &[i128], x_num: i128, x_den: i128) -> i128 {
    // den^deg · f(num/den)
    let d = c.len() - 1;
    c.iter()
        .enumerate()
        .map(|(i, a)| a * x_num.pow(i as u32) * x_den.pow((d - i) as u32))
        .sum()
}

/// Exact division of integer polynomials; `None` when not exact.
fn divide(f: &[i128], g: &[i128]) -> Option<Vec<i128>> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    if r.len() < g.len() {
        return None;
    }
    let mut q = vec![0; r.len() - dg];
    for k in (0..q.len()).rev() {
        let top = r[k + dg];
        if top % g[dg] != 0 {
            return None;
        }
        let c = top / g[dg];
        q[k] = c;
        for (i, gi) in g.iter().enumerate() {
            r[k + i] -= c * gi;
        }
    }
    r.iter().all(|&x| x == 0).then_some(q)
}

fn primitive(c: &[i128]) -> Vec<i128> {
    let g = c.iter().fold(0i128, |a, &b| num_integer::gcd(a, b));
    let s = if c.last().unwrap() < &0 { -1 } else { 1 };
    c.iter().map(|x| x / g * s).collect()
}

/// Degrees of the irreducible factors over ℚ of a nonzero integer polynomial
/// of degree at most 4, by exhaustive search: rational roots from divisors of
/// the end coefficients, then quadratic factors `b₂x² + b₁x + b₀` with
/// `b₂ | lc`, `b₀ | f(0)` and `b₂ + b₁ + b₀ | f(1)`.
pub fn brute_force_degrees(coeffs: &[i64]) -> Vec<usize> {
    let mut c: Vec<i128> = coeffs.iter().map(|&x| x as i128).collect();
    while c.last() == Some(&0) {
        c.pop();
    }
    let mut out = Vec::new();
    let mut c = primitive(&c);
    'outer: loop {
        let d = c.len() - 1;
        if d <= 1 {
            if d == 1 {
                out.push(1);
            }
            break;
        }
        if c[0] == 0 {
            out.push(1);
            c.remove(0);
            continue;
        }
        for p in divisors(c[0]) {
            for q in divisors(c[d]) {
                for p in [p, -p] {
                    if num_integer::gcd(p, q) == 1 && eval(&c, p, q) == 0 {
                        out.push(1);
                        c = primitive(&divide(&c, &[-p, q]).unwrap());
                        continue 'outer;
                    }
                }
            }
        }
        if d == 4 {
            let f1 = eval(&c, 1, 1);
            for b2 in divisors(c[4]) {
                for b0 in divisors(c[0]).into_iter().flat_map(|b| [b, -b]) {
                    for s in divisors(f1).into_iter().flat_map(|b| [b, -b]) {
                        let b1 = s - b2 - b0;
                        if divide(&c, &[b0, b1, b2]).is_some() {
                            out.extend([2, 2]);
                            break 'outer;
                        }
                    }
                }
            }
        }
        out.push(d);
        break;
    }
    out.sort_unstable();
    out
}

/// Every subspace of the even-weight vectors in `F₂ⁿ`, each as the set of
/// its elements (bit masks of length `n`).
pub fn all_even_weight_subspaces(n: usize) -> Vec<HashSet<u32>> {
    let evens: Vec<u32> = (0u32..1 << n).filter(|v| v.count_ones() % 2 == 0).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut stack = vec![vec![0u32]];
    let mut out = Vec::new();
    while let Some(space) = stack.pop() {
        let mut key = space.clone();
        key.sort_unstable();
        if !seen.insert(key) {
            continue;
        }
        let set: HashSet<u32> = space.iter().copied().collect();
        for &v in &evens {
            if !set.contains(&v) {
                let mut bigger = space.clone();
                bigger.extend(space.iter().map(|w| w ^ v));
                stack.push(bigger);
            }
        }
        out.push(set);
    }
    out
}

/// Permutes the bits of `v` by the 1-based image list.
pub fn permute_bits(images: &[usize], v: u32) -> u32 {
    images
        .iter()
        .enumerate()
        .filter(|(i, _)| v >> i & 1 == 1)
        .fold(0, |acc, (_, &j)| acc | 1 << (j - 1))
}

/// Simplicity of the even-weight module under the given permutations, by
/// checking every subspace for invariance.
pub fn simple_by_all_subspaces(n: usize, gens: &[Vec<usize>]) -> bool {
    let full = 1usize << (n - 1);
    all_even_weight_subspaces(n).into_iter().all(|s| {
        let invariant = s
            .iter()
            .all(|&v| gens.iter().all(|g| s.contains(&permute_bits(g, v))));
        !invariant || s.len() == 1 || s.len() == full
    })
}

pub fn shanks(a: i64) -> Polynomial {
    Polynomial::from_ints(&[-1, -(a + 3), -a, 1])
}
