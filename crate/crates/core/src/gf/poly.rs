use std::fmt;

use super::{Fe, FiniteField};
use crate::{Error, Result};

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FiniteField,
    coeffs: Vec<Fe>,
}

impl Polynomial {
    pub fn new(field: &FiniteField, mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last() == Some(&Fe::ZERO) {
            coeffs.pop();
        }
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    /// From integer coefficients reduced into the prime subfield.
    pub fn from_ints(field: &FiniteField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FiniteField) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(field: &FiniteField, c: Fe) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: &FiniteField) -> Self {
        Self::constant(field, Fe::ONE)
    }

    pub fn x(field: &FiniteField) -> Self {
        Self::new(field, vec![Fe::ZERO, Fe::ONE])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(field: &FiniteField, n: usize) -> Self {
        let mut c = vec![Fe::ZERO; n + 1];
        c[0] = field.neg(Fe::ONE);
        c[n] = Fe::ONE;
        Self::new(field, c)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Fe::ONE]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Fe::ONE
    }

    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: Fe) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(Fe::ZERO);
                let b = other.coeffs.get(i).copied().unwrap_or(Fe::ZERO);
                f.add(a, b)
            })
            .collect();
        Self::new(f, c)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut c = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Self::new(f, c)
    }

    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = f.inv(divisor.leading()).ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            quot[shift] = c;
            for (k, &dk) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = f.sub(rem[shift + k], f.mul(c, dk));
            }
        }
        rem.truncate(dd);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.divrem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, f.from_int(i as i64)))
            .collect();
        Self::new(f, c)
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            base = base.mul_mod(&base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility over the coefficient field: no factor of degree `<= d/2`,
    /// detected through `gcd(x^(q^i) - x, f)`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let f = &self.field;
        let q = f.order() as u128;
        let x = Self::x(f);
        let mut h = x.clone();
        for _ in 0..d / 2 {
            h = h.pow_mod(q, self).expect("nonzero modulus");
            if !h.sub(&x).gcd(self).is_one() {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let cs = self.field.format(c);
                let cs = if self.field.degree() > 1 && cs.contains('+') {
                    format!("({cs})")
                } else {
                    cs
                };
                let coef = if c == Fe::ONE && i > 0 { String::new() } else { cs };
                match i {
                    0 => coef,
                    1 => format!("{coef}x"),
                    _ => format!("{coef}x^{i}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
