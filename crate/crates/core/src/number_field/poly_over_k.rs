use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::Polynomial;

use super::field::{FieldElement, NumberField};

/// Dense univariate polynomial with coefficients in a stem field.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyOverK {
    field: NumberField,
    coeffs: Vec<FieldElement>,
}

impl PolyOverK {
    pub fn new(field: &NumberField, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyOverK { field: field.clone(), coeffs }
    }

    pub fn zero(field: &NumberField) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &NumberField) -> Self {
        Self::new(field, vec![field.one()])
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    /// `x - a`.
    pub fn linear(a: &FieldElement) -> Self {
        let field = a.field().clone();
        Self::new(&field, vec![-a, field.one()])
    }

    /// Image of a rational polynomial.
    pub fn from_rational_poly(field: &NumberField, f: &Polynomial) -> Self {
        Self::new(
            field,
            f.coeffs().iter().map(|c| field.from_rational(c.clone())).collect(),
        )
    }

    /// The rational polynomial, when every coefficient is rational.
    pub fn to_rational_poly(&self) -> Option<Polynomial> {
        self.coeffs
            .iter()
            .map(FieldElement::as_rational)
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::from_coeffs)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coeff().inverse().expect("leading coefficient is nonzero");
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * at) + c)
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &FieldElement) -> Self {
        let lin = Self::new(&self.field, vec![c.clone(), self.field.one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(&self.field), |acc, a| &(&acc * &lin) + &Self::constant(a.clone()))
    }

    pub fn div_rem(&self, divisor: &PolyOverK) -> Result<(PolyOverK, PolyOverK)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let inv = divisor.leading_coeff().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &inv;
            let shift = top - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * d);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::new(&self.field, quot), Self::new(&self.field, rem)))
    }

    pub fn rem(&self, divisor: &PolyOverK) -> Result<PolyOverK> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &PolyOverK) -> Result<Option<PolyOverK>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic gcd; zero when both inputs are zero.
    pub fn gcd(a: &PolyOverK, b: &PolyOverK) -> PolyOverK {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition of a nonzero polynomial into monic
    /// parts `(g, m)` with `f = lc · Π g^m`.
    pub fn squarefree_decomposition(&self) -> Vec<(PolyOverK, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = PolyOverK::gcd(&f, &df);
        let mut b = f.exact_div(&a).unwrap().expect("gcd divides f");
        let mut c = df.exact_div(&a).unwrap().expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = PolyOverK::gcd(&b, &d);
            b = b.exact_div(&a).unwrap().expect("gcd divides b");
            c = d.exact_div(&a).unwrap().expect("gcd divides d");
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && PolyOverK::gcd(self, &self.derivative()).is_constant()
    }
}

impl fmt::Debug for PolyOverK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyOverK {
    /// Coefficients in parentheses, highest degree first, e.g. `(1)*x^2 + (t)*x + (t^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

fn zip_with(
    a: &PolyOverK,
    b: &PolyOverK,
    op: impl Fn(&FieldElement, &FieldElement) -> FieldElement,
) -> PolyOverK {
    let n = a.coeffs.len().max(b.coeffs.len());
    PolyOverK::new(&a.field, (0..n).map(|i| op(&a.coeff(i), &b.coeff(i))).collect())
}

impl Add for &PolyOverK {
    type Output = PolyOverK;
    fn add(self, rhs: &PolyOverK) -> PolyOverK {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &PolyOverK {
    type Output = PolyOverK;
    fn sub(self, rhs: &PolyOverK) -> PolyOverK {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &PolyOverK {
    type Output = PolyOverK;
    fn neg(self) -> PolyOverK {
        PolyOverK::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolyOverK {
    type Output = PolyOverK;
    fn mul(self, rhs: &PolyOverK) -> PolyOverK {
        if self.is_zero() || rhs.is_zero() {
            return PolyOverK::zero(&self.field);
        }
        // accumulate unreduced products, reduce once per output coefficient
        let mut acc = vec![Polynomial::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = &acc[i + j] + &(a.repr() * b.repr());
            }
        }
        PolyOverK::new(
            &self.field,
            acc.into_iter().map(|c| self.field.element(c)).collect(),
        )
    }
}
