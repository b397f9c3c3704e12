//! Finite fields `GF(p^m)` with `q = p^m <= 2^16`, polynomials over them,
//! and the dense linear algebra used by the code constructions.
//!
//! Elements are stored packed: the base-`p` digits of an [`Fe`] are the
//! coefficients of the element in the polynomial basis `1, w, w^2, ...`,
//! where `w` is a root of the field modulus. Multiplication goes through
//! exp/log tables built once per field.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

mod factor;
pub mod linalg;
mod poly;

pub use factor::{poly_factor, Factorization};
pub use poly::Polynomial;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// A packed field element; only meaningful together with its [`FiniteField`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// Packed index in `0..q`.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldInner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    /// `exp[i] = g^i` for a fixed primitive element `g`, doubled to skip a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Full addition table for `q <= 256`.
    add: Option<Vec<u16>>,
    neg: Vec<u32>,
}

/// The finite field `GF(p^m)`. Cheap to clone.
#[derive(Clone)]
pub struct FiniteField(Arc<FieldInner>);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest `t >= 1` with `q^t = 1 (mod n)`.
pub fn multiplicative_order_mod(q: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NotCoprime { a: q, b: n, gcd: q });
    }
    if n == 1 {
        return Ok(1);
    }
    let g = gcd(q % n, n);
    if g != 1 {
        return Err(Error::NotCoprime { a: q, b: n, gcd: g });
    }
    let base = q % n;
    let mut acc = base;
    let mut t = 1;
    while acc != 1 {
        acc = ((acc as u128 * base as u128) % n as u128) as u64;
        t += 1;
    }
    Ok(t)
}

/// Inverse of `a` modulo `m` by extended Euclid.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (s0, s1) = (s1, s0 - quot * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as u64)
}

fn digits(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn pack(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Schoolbook product of two packed elements reduced by a monic modulus over GF(p).
fn slow_mul(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let m = (modulus.len() - 1) as u32;
    let (da, db) = (digits(a, p, m), digits(b, p, m));
    let mut prod = vec![0u64; 2 * m as usize];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for top in (m as usize..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        let shift = top - m as usize;
        for (k, &mk) in modulus.iter().enumerate() {
            let idx = shift + k;
            prod[idx] = (prod[idx] + (p as u64 - c) * mk as u64) % p as u64;
        }
    }
    let ds: Vec<u32> = prod[..m as usize].iter().map(|&d| d as u32).collect();
    pack(&ds, p)
}

fn slow_pow(mut base: u32, mut e: u64, p: u32, modulus: Option<&[u32]>) -> u32 {
    let mul = |a: u32, b: u32| match modulus {
        Some(md) => slow_mul(a, b, p, md),
        None => ((a as u64 * b as u64) % p as u64) as u32,
    };
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

impl FiniteField {
    /// Builds `GF(p^m)`; for `m > 1` the modulus is the lexicographically
    /// smallest monic irreducible polynomial of degree `m` over `GF(p)`,
    /// comparing coefficients from the constant term upwards.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge { p, m })?;
        let modulus = if m == 1 {
            None
        } else {
            let prime = FiniteField::new(p, 1)?;
            Some(smallest_irreducible(&prime, m as usize))
        };
        Ok(Self::with_modulus(p as u32, m, q as u32, modulus))
    }

    /// Builds `GF(q)` from a prime power `q`.
    pub fn from_order(q: u64) -> Result<Self> {
        let ps = prime_factors(q);
        if ps.len() != 1 {
            return Err(Error::NotPrime(q));
        }
        let p = ps[0];
        let mut m = 0;
        let mut r = q;
        while r > 1 {
            r /= p;
            m += 1;
        }
        Self::new(p, m)
    }

    fn with_modulus(p: u32, m: u32, q: u32, modulus: Option<Vec<u32>>) -> Self {
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let md = modulus.as_deref();
        let generator = (1..q)
            .find(|&g| {
                order == 0 || factors.iter().all(|&r| slow_pow(g, order / r, p, md) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..order.max(1) as u32 {
            exp.push(cur);
            log[cur as usize] = i;
            cur = match md {
                Some(mdv) => slow_mul(cur, generator, p, mdv),
                None => ((cur as u64 * generator as u64) % p as u64) as u32,
            };
        }
        let len = exp.len();
        exp.extend_from_within(..len);

        let neg: Vec<u32> = (0..q)
            .map(|a| pack(&digits(a, p, m).iter().map(|&d| (p - d) % p).collect::<Vec<_>>(), p))
            .collect();
        let add = (q <= 256).then(|| {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p, m);
                for b in 0..q {
                    let db = digits(b, p, m);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    table[(a * q + b) as usize] = pack(&s, p) as u16;
                }
            }
            table
        });
        FiniteField(Arc::new(FieldInner {
            p,
            m,
            q,
            modulus,
            exp,
            log,
            add,
            neg,
        }))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q as u64
    }

    /// Modulus coefficients over `GF(p)`, constant term first; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(Fe)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        if coeffs.len() > self.0.m as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::Unsupported(format!(
                "{coeffs:?} is not an element of GF({})",
                self.0.q
            )));
        }
        Ok(Fe(pack(coeffs, self.0.p)))
    }

    /// Coefficients in the polynomial basis, exactly `m` residues.
    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        digits(a.0, self.0.p, self.0.m)
    }

    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.0.q
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let f = &*self.0;
        if let Some(t) = &f.add {
            return Fe(t[(a.0 * f.q + b.0) as usize] as u32);
        }
        if f.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if f.m == 1 {
            return Fe((a.0 + b.0) % f.p);
        }
        let s: Vec<u32> = digits(a.0, f.p, f.m)
            .iter()
            .zip(digits(b.0, f.p, f.m))
            .map(|(x, y)| (x + y) % f.p)
            .collect();
        Fe(pack(&s, f.p))
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let f = &*self.0;
        Fe(f.exp[(f.log[a.0 as usize] + f.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        let f = &*self.0;
        let order = f.q - 1;
        Some(Fe(f.exp[((order - f.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Fe, e: u128) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let f = &*self.0;
        let order = (f.q - 1) as u128;
        let l = (f.log[a.0 as usize] as u128 * (e % order)) % order;
        Fe(f.exp[l as usize])
    }

    /// `a^(p^t)`.
    pub fn frobenius(&self, a: Fe, t: u32) -> Fe {
        let e = (self.0.p as u128).pow(t % self.0.m);
        self.pow(a, e)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Fe) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let order = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64;
        Some(order / gcd(l, order))
    }

    pub fn element(&self, a: Fe) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: a,
        }
    }

    /// Human-readable form: an integer for prime fields, otherwise a polynomial in `w`.
    pub fn format(&self, a: Fe) -> String {
        if self.0.m == 1 {
            return a.0.to_string();
        }
        let ds = self.coeffs(a);
        let terms: Vec<String> = ds
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
                match i {
                    0 => coef,
                    1 => format!("{coef}w"),
                    _ => format!("{coef}w^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)?;
        if let Some(md) = &self.0.modulus {
            write!(f, " mod {md:?}")?;
        }
        Ok(())
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

fn smallest_irreducible(prime: &FiniteField, m: usize) -> Vec<u32> {
    let p = prime.characteristic() as u32;
    let count = (p as u64).pow(m as u32);
    // Counting with the constant term as the most significant digit walks the
    // candidates in low-degree-first lexicographic order.
    for idx in 0..count {
        let mut coeffs = vec![0u32; m + 1];
        let mut r = idx;
        for j in (0..m).rev() {
            coeffs[j] = (r % p as u64) as u32;
            r /= p as u64;
        }
        coeffs[m] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        let poly = Polynomial::new(prime, coeffs.iter().map(|&c| Fe(c)).collect());
        if poly.is_irreducible() {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// A field element bundled with its field, with checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    value: Fe,
}

impl FieldElement {
    pub fn new(field: &FiniteField, value: Fe) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::FieldMismatch);
        }
        Ok(field.element(value))
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn value(&self) -> Fe {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.element(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.element(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.field.element(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        let v = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.element(v))
    }

    pub fn neg(&self) -> Self {
        self.field.element(self.field.neg(self.value))
    }

    pub fn pow(&self, e: u128) -> Self {
        self.field.element(self.field.pow(self.value, e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(self.value), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_no_modulus() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert!(f.modulus().is_none());
        assert_eq!(f.add(Fe::ONE, Fe::ONE), Fe::ZERO);
    }

    #[test]
    fn gf4_modulus_and_omega_squared() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
        let w = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(w, w), f.from_coeffs(&[1, 1]).unwrap());
    }

    #[test]
    fn gf9_modulus_by_scan() {
        // Oracle: test every monic quadratic x^2 + c1 x + c0 for roots over
        // GF(3), order candidates by (c0, c1).
        let mut expected = None;
        'outer: for c0 in 0..3u32 {
            for c1 in 0..3u32 {
                if (0..3u32).all(|x| (x * x + c1 * x + c0) % 3 != 0) {
                    expected = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus().map(<[u32]>::to_vec), expected);
        assert_eq!(expected, Some(vec![1, 0, 1]));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FiniteField::new(3, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(FiniteField::new(2, 17), Err(Error::FieldTooLarge { .. })));
        assert!(FiniteField::new(2, 16).is_ok());
    }

    #[test]
    fn deterministic_construction() {
        let a = FiniteField::new(5, 3).unwrap();
        let b = FiniteField::new(5, 3).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a, b);
    }

    #[test]
    fn fermat_little_theorem_small_fields() {
        for (p, m) in [(2, 1), (2, 2), (2, 3), (2, 8), (3, 1), (3, 2), (3, 5), (5, 2), (7, 2), (13, 2), (251, 1)] {
            let f = FiniteField::new(p, m).unwrap();
            let q = f.order();
            assert!(q <= 256);
            for a in f.elements().skip(1) {
                // Repeated multiplication, independent of the log tables' pow.
                let mut acc = Fe::ONE;
                for _ in 0..q - 1 {
                    acc = f.mul(acc, a);
                }
                assert_eq!(acc, Fe::ONE, "GF({q}) element {a:?}");
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
            }
        }
    }

    #[test]
    fn field_axioms_gf9() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                for c in f.elements() {
                    let lhs = f.mul(a, f.add(b, c));
                    let rhs = f.add(f.mul(a, b), f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn large_field_uses_digitwise_addition() {
        let f = FiniteField::new(3, 7).unwrap();
        let a = f.from_coeffs(&[2, 1, 0, 0, 0, 0, 2]).unwrap();
        let b = f.from_coeffs(&[1, 1, 1, 0, 0, 0, 2]).unwrap();
        assert_eq!(f.coeffs(f.add(a, b)), vec![0, 2, 1, 0, 0, 0, 1]);
        assert_eq!(f.sub(f.add(a, b), b), a);
    }

    #[test]
    fn checked_element_ops() {
        let f2 = FiniteField::new(2, 1).unwrap();
        let f3 = FiniteField::new(3, 1).unwrap();
        let one2 = f2.element(Fe::ONE);
        let one3 = f3.element(Fe::ONE);
        assert_eq!(one2.add(&one3).unwrap_err(), Error::FieldMismatch);
        assert_eq!(one2.inv().unwrap(), one2);
        assert_eq!(f2.element(Fe::ZERO).inv().unwrap_err(), Error::DivisionByZero);
        assert!(one2.add(&one2).unwrap().is_zero());
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order_mod(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order_mod(2, 9).unwrap(), 6);
        assert_eq!(multiplicative_order_mod(5, 1).unwrap(), 1);
        assert!(matches!(multiplicative_order_mod(3, 9), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(inverse_mod(2, 7), Some(4));
        assert_eq!(inverse_mod(3, 9), None);
        assert_eq!(inverse_mod(1, 1), Some(0));
    }

    #[test]
    fn formatting() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.format(f.from_coeffs(&[1, 2]).unwrap()), "2w+1");
        assert_eq!(f.format(Fe::ZERO), "0");
        assert_eq!(f.format(f.from_coeffs(&[0, 1]).unwrap()), "w");
    }
}
