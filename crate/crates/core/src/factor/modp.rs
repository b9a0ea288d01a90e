use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::integer::{is_prime_u64, pow_mod};
use crate::exact::IntPoly;

/// Largest modulus accepted by the mod-p routines; products of two residues
/// must fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Primes up to this bound are split by the exhaustive Berlekamp scan over
/// all residues; larger primes use seeded random splitting.
const EXHAUSTIVE_SPLIT_LIMIT: u64 = 1 << 12;

/// Polynomial over the prime field F_p, low degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModPPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPPolynomial {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut out = ModPPolynomial {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        out.trim();
        out
    }

    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let bp = BigInt::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&bp).to_u64().unwrap())
                .collect(),
        )
    }

    /// Lifts residues to integers in `[0, p)`.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn zero_like(&self) -> Self {
        ModPPolynomial { p: self.p, coeffs: Vec::new() }
    }

    fn constant_like(&self, c: u64) -> Self {
        Self::new(self.p, vec![c])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.inv(self.leading_coeff());
        self.scale(inv)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| a * c % self.p).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&0) + rhs.coeffs.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&0) + self.p - rhs.coeffs.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return self.zero_like();
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok((self.zero_like(), self.zero_like()));
        };
        if nd < dd {
            return Ok((self.zero_like(), self.clone()));
        }
        let p = self.p;
        let lc_inv = self.inv(divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd] * lc_inv % p;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - c * d % p) % p;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).expect("nonzero divisor").1
    }

    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % self.p) * c % self.p)
                .collect(),
        )
    }

    /// Monic gcd.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·a + t·b = g` monic.
    pub fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (a.constant_like(1), a.zero_like());
        let (mut t0, mut t1) = (a.zero_like(), a.constant_like(1));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.inv(r0.leading_coeff());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = m.constant_like(1).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Ordering used for deterministic factor lists: degree, then coefficients
    /// from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

fn check_modulus(p: u64) -> Result<()> {
    if p < 2 || p > MAX_MODULUS || !is_prime_u64(p) {
        return Err(Error::invalid(format!("modulus {p} is not a prime below 2^31")));
    }
    Ok(())
}

/// Squarefree decomposition over F_p: `monic(f) = Π gᵢ^mᵢ` with each `gᵢ`
/// squarefree. Handles `p`-th powers.
fn squarefree_mod_p(f: &ModPPolynomial) -> Vec<(ModPPolynomial, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut c = ModPPolynomial::gcd(f, &f.derivative());
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = ModPPolynomial::gcd(&w, &c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y.clone();
        c = c.exact_div(&y);
        i += 1;
    }
    if !c.is_one() && !c.is_zero() {
        // c is a polynomial in x^p; take the p-th root coefficientwise
        let root = ModPPolynomial::new(p, c.coeffs.iter().step_by(p as usize).copied().collect());
        for (g, m) in squarefree_mod_p(&root) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Rows `x^(i·p) mod f` for `i < deg f`.
fn berlekamp_matrix(f: &ModPPolynomial) -> Vec<Vec<u64>> {
    let n = f.degree().unwrap();
    let x = ModPPolynomial::new(f.p, vec![0, 1]);
    let xp = x.pow_mod(f.p, f);
    let mut row = f.constant_like(1);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let mut r = row.coeffs.clone();
        r.resize(n, 0);
        rows.push(r);
        row = row.mul(&xp).rem(f);
    }
    rows
}

/// Null space of the `rows × cols` matrix `a` over F_p, as a list of basis vectors.
fn null_space(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = pow_mod(a[r][c], p - 2, p);
        for v in a[r].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let factor = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - factor * a[r][j] % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - a[i][fc]) % p;
            }
            v
        })
        .collect()
}

/// Basis of the Berlekamp subalgebra `{v : v^p ≡ v mod f}`.
fn berlekamp_basis(f: &ModPPolynomial) -> Vec<ModPPolynomial> {
    let n = f.degree().unwrap();
    let q = berlekamp_matrix(f);
    // column j of (Q − I)^T ... solve Σ_i v_i (Q[i][j] − δ_ij) = 0
    let system: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let d = if i == j { 1 } else { 0 };
                    (q[i][j] + f.p - d) % f.p
                })
                .collect()
        })
        .collect();
    null_space(system, n, f.p)
        .into_iter()
        .map(|v| ModPPolynomial::new(f.p, v))
        .collect()
}

/// Number of distinct irreducible factors of a squarefree `f`: the dimension
/// of the Berlekamp subalgebra.
pub fn berlekamp_rank(f: &ModPPolynomial) -> usize {
    match f.degree() {
        None | Some(0) => 0,
        Some(_) => berlekamp_basis(&f.monic()).len(),
    }
}

/// Irreducibility over F_p via the Berlekamp subalgebra dimension.
pub fn is_irreducible_mod_p(f: &ModPPolynomial) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let df = f.derivative();
            ModPPolynomial::gcd(f, &df).is_one() && berlekamp_rank(f) == 1
        }
    }
}

fn berlekamp_split(f: &ModPPolynomial) -> Vec<ModPPolynomial> {
    if f.degree() == Some(1) {
        return vec![f.clone()];
    }
    let basis = berlekamp_basis(f);
    let r = basis.len();
    let mut factors = vec![f.clone()];
    if r == 1 {
        return factors;
    }
    if f.p <= EXHAUSTIVE_SPLIT_LIMIT {
        for v in basis.iter().filter(|v| v.degree().unwrap_or(0) > 0) {
            for s in 0..f.p {
                let shifted = v.sub(&f.constant_like(s));
                let mut next = Vec::with_capacity(factors.len() + 1);
                for u in factors {
                    if u.degree() == Some(1) {
                        next.push(u);
                        continue;
                    }
                    let g = ModPPolynomial::gcd(&u, &shifted);
                    if g.degree().unwrap_or(0) > 0 && g.degree() < u.degree() {
                        next.push(u.exact_div(&g));
                        next.push(g);
                    } else {
                        next.push(u);
                    }
                }
                factors = next;
                if factors.len() == r {
                    return factors;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6265_726c_656b_616d);
        let half = (f.p - 1) / 2;
        while factors.len() < r {
            let w = basis.iter().fold(f.zero_like(), |acc, b| {
                acc.add(&b.scale(rng.gen_range(0..f.p)))
            });
            let mut next = Vec::with_capacity(factors.len() + 1);
            for u in factors {
                if u.degree() == Some(1) {
                    next.push(u);
                    continue;
                }
                let t = w.pow_mod(half, &u).sub(&f.constant_like(1));
                let g = ModPPolynomial::gcd(&u, &t);
                if g.degree().unwrap_or(0) > 0 && g.degree() < u.degree() {
                    next.push(u.exact_div(&g));
                    next.push(g);
                } else {
                    next.push(u);
                }
            }
            factors = next;
        }
    }
    factors
}

/// Complete factorization over F_p into monic irreducibles with
/// multiplicities, sorted by degree then coefficients. The product of the
/// factors equals `f` up to its leading coefficient.
pub fn factor_mod_p(f: &ModPPolynomial) -> Result<Vec<(ModPPolynomial, usize)>> {
    check_modulus(f.p)?;
    if f.is_zero() {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    }
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    for (part, mult) in squarefree_mod_p(&f.monic()) {
        for g in berlekamp_split(&part) {
            out.push((g.monic(), mult));
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Degrees of the irreducible factors of `f mod p`, largest first, or `None`
/// when `p` divides the leading coefficient or `f mod p` is not squarefree.
pub fn degree_pattern_mod_p(f: &IntPoly, p: u64) -> Option<Vec<usize>> {
    let fp = ModPPolynomial::from_int_poly(f, p);
    if fp.degree() != f.degree() {
        return None;
    }
    if !ModPPolynomial::gcd(&fp, &fp.derivative()).is_one() {
        return None;
    }
    let mut degrees: Vec<usize> = berlekamp_split(&fp.monic())
        .iter()
        .map(|g| g.degree().unwrap())
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Some(degrees)
}
