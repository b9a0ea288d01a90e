use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{resultant, Polynomial};
use crate::factor::factor_over_q;

/// A stem field `ℚ[x]/(m)` for a monic irreducible `m`.
///
/// Cloning is cheap; elements hold a handle to their field.
#[derive(Clone)]
pub struct NumberField {
    modulus: Arc<Polynomial>,
}

impl NumberField {
    /// Builds the stem field of `min_poly`, normalized to be monic.
    ///
    /// Fails with an invalid-input error when `min_poly` is constant or
    /// reducible over ℚ.
    pub fn new(min_poly: &Polynomial) -> Result<Self> {
        if min_poly.degree().unwrap_or(0) == 0 {
            return Err(Error::invalid("a stem field needs a nonconstant polynomial"));
        }
        let m = min_poly.monic();
        if !factor_over_q(&m)?.is_irreducible() {
            return Err(Error::invalid(format!("{m} is reducible over Q")));
        }
        Ok(NumberField { modulus: Arc::new(m) })
    }

    pub fn min_poly(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn element(&self, repr: Polynomial) -> FieldElement {
        let repr = if repr.degree().is_some_and(|d| d >= self.degree()) {
            repr.rem(&self.modulus).expect("nonzero modulus")
        } else {
            repr
        };
        FieldElement { field: self.clone(), repr }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(Polynomial::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.element(Polynomial::one())
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElement {
        self.element(Polynomial::constant(q))
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    /// The class `θ` of `x`.
    pub fn generator(&self) -> FieldElement {
        self.element(Polynomial::x())
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.modulus)
    }
}

/// Element of a [`NumberField`] in the power basis of `θ`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    repr: Polynomial,
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Coordinates as a polynomial in `θ` of degree below `[K:ℚ]`.
    pub fn repr(&self) -> &Polynomial {
        &self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.repr == Polynomial::one()
    }

    /// The rational value when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.repr.is_constant().then(|| self.repr.coeff(0))
    }

    /// Multiplicative inverse via the extended gcd with the minimal polynomial.
    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = Polynomial::xgcd(&self.repr, self.field.min_poly());
        if !g.is_constant() {
            return Err(Error::Inconsistency("minimal polynomial is not irreducible".into()));
        }
        Ok(self.field.element(s))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `N_{K/ℚ}(self) = Res(m, repr)` for monic `m`.
    pub fn norm(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        if let Some(q) = self.as_rational() {
            return num_traits::Pow::pow(q, self.field.degree() as u32);
        }
        resultant(self.field.min_poly(), &self.repr).expect("modulus is nonzero")
    }

    fn check_same_field(&self, rhs: &FieldElement) {
        debug_assert!(self.field == rhs.field, "mixing elements of different fields");
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.repr)
    }
}

impl fmt::Display for FieldElement {
    /// Written as a polynomial in `t`, the class of the generator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr.to_string().replace('x', "t"))
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        FieldElement { field: self.field.clone(), repr: &self.repr + &rhs.repr }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        FieldElement { field: self.field.clone(), repr: &self.repr - &rhs.repr }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), repr: -&self.repr }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check_same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        if let Some(q) = self.as_rational() {
            return FieldElement { field: self.field.clone(), repr: rhs.repr.scale(&q) };
        }
        if let Some(q) = rhs.as_rational() {
            return FieldElement { field: self.field.clone(), repr: self.repr.scale(&q) };
        }
        self.field.element(&self.repr * &rhs.repr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_in_pure_cubic_field() {
        let k = NumberField::new(&Polynomial::from_ints(&[-2, 0, 0, 1])).unwrap();
        let t = k.generator();
        let inv = t.inverse().unwrap();
        assert_eq!(inv.repr(), &Polynomial::monomial(q(1, 2), 2));
        assert!((&t * &inv).is_one());
        assert!(k.one().inverse().unwrap().is_one());
    }

    #[test]
    fn inverse_in_gaussian_field() {
        let k = NumberField::new(&Polynomial::from_ints(&[1, 0, 1])).unwrap();
        let a = &k.one() + &k.generator();
        let inv = a.inverse().unwrap();
        assert_eq!(inv.repr(), &Polynomial::from_coeffs(vec![q(1, 2), q(-1, 2)]));
        assert!(matches!(k.zero().inverse(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(
            NumberField::new(&Polynomial::from_ints(&[-1, 0, 1])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn norms() {
        let k = NumberField::new(&Polynomial::from_ints(&[1, 0, 1])).unwrap();
        let a = &k.one() + &k.generator();
        assert_eq!(a.norm(), q(2, 1));
        let k3 = NumberField::new(&Polynomial::from_ints(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(k3.generator().norm(), q(2, 1));
        assert_eq!(k3.from_int(3).norm(), q(27, 1));
    }
}
