use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

/// Dense polynomial with integer coefficients, low degree first.
///
/// Used by the subresultant resultant and by the Hensel/Zassenhaus machinery,
/// where coefficients are also reduced modulo a prime power.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar(&c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division of every coefficient; the caller guarantees divisibility.
    pub fn div_scalar(&self, c: &BigInt) -> IntPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a / c).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn norm_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Pseudo-remainder: `lc(b)^(deg a − deg b + 1) · a = q·b + r`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut steps = da - db + 1;
        for k in (0..=da - db).rev() {
            let c = r[k + db].clone();
            for x in r.iter_mut().take(k + db + 1) {
                *x *= &lb;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= &c * bc;
            }
            steps -= 1;
        }
        debug_assert_eq!(steps, 0);
        r.truncate(db);
        IntPoly::from_coeffs(r)
    }

    /// Quotient over ℤ when `divisor` divides `self` with an integral quotient.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        let Some(nd) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if nd < dd {
            return None;
        }
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let (c, r) = rem[k + dd].div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| IntPoly::from_coeffs(quot))
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce(&self, m: &BigInt) -> IntPoly {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Coefficients reduced into the symmetric range `(−m/2, m/2]`.
    pub fn symmetric(&self, m: &BigInt) -> IntPoly {
        let half = m / 2;
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    /// Division by a divisor whose leading coefficient is a unit modulo `m`,
    /// with all arithmetic reduced modulo `m`.
    pub fn div_rem_mod(&self, divisor: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
        let divisor = divisor.reduce(m);
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = mod_inverse(&divisor.leading_coeff(), m).expect("unit leading coefficient");
        let this = self.reduce(m);
        let Some(nd) = this.degree() else {
            return (IntPoly::zero(), IntPoly::zero());
        };
        if nd < dd {
            return (IntPoly::zero(), this);
        }
        let mut rem = this.coeffs;
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = (&rem[k + dd] * &lc_inv).mod_floor(m);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (&rem[k + j] - &c * dc).mod_floor(m);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem))
    }

    pub fn is_negative_leading(&self) -> bool {
        self.coeffs.last().is_some_and(Signed::is_negative)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.mod_floor(m).extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pseudo_remainder_identity() {
        let a = IntPoly::from_i64(&[1, 2, 3, 4]);
        let b = IntPoly::from_i64(&[1, 0, 2]);
        let r = a.pseudo_rem(&b);
        // 2^2 · a = q·b + r with deg r < 2
        assert!(r.degree().unwrap_or(0) < 2);
        let lhs = a.scale(&BigInt::from(4));
        let q = (&lhs - &r).div_exact(&b).expect("exact after removing remainder");
        assert_eq!(&(&q * &b) + &r, lhs);
    }

    #[test]
    fn exact_division_rejects_non_integral() {
        let a = IntPoly::from_i64(&[1, 0, 1]);
        let b = IntPoly::from_i64(&[1, 2]);
        assert!(a.div_exact(&b).is_none());
        let c = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(c.div_exact(&IntPoly::from_i64(&[1, 1])), Some(IntPoly::from_i64(&[-1, 1])));
    }

    #[test]
    fn symmetric_range() {
        let p = IntPoly::from_i64(&[5, 4, 1]);
        assert_eq!(p.symmetric(&BigInt::from(9)), IntPoly::from_i64(&[-4, 4, 1]));
    }
}
