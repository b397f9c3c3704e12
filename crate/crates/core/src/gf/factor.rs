//! Factorization over `GF(q)`: squarefree decomposition, distinct-degree
//! splitting, then Cantor-Zassenhaus equal-degree splitting driven by a
//! fixed-seed generator so that every run returns the same factors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Fe, FiniteField, Polynomial};
use crate::{Error, Result};

const SPLIT_SEED: u64 = 0x0d0a_d1c5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub leading: Fe,
    /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    /// Product of the factors times the leading coefficient.
    pub fn expand(&self) -> Option<Polynomial> {
        let field = self.factors.first()?.0.field().clone();
        let mut acc = Polynomial::constant(&field, self.leading);
        for (f, k) in &self.factors {
            for _ in 0..*k {
                acc = acc.mul(f);
            }
        }
        Some(acc)
    }
}

pub fn poly_factor(f: &Polynomial) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let leading = f.leading();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut factors: Vec<(Polynomial, usize)> = Vec::new();
    for (part, mult) in squarefree(&f.monic())? {
        for (block, d) in distinct_degree(&part)? {
            let mut pieces = Vec::new();
            equal_degree(&block, d, &mut rng, &mut pieces)?;
            for piece in pieces {
                match factors.iter_mut().find(|(g, _)| *g == piece) {
                    Some(entry) => entry.1 += mult,
                    None => factors.push((piece, mult)),
                }
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    Ok(Factorization { leading, factors })
}

/// Squarefree parts of a monic polynomial with their multiplicities.
fn squarefree(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    let field = f.field();
    let mut out = Vec::new();
    if f.degree() == Some(0) {
        return Ok(out);
    }
    let p = field.characteristic() as usize;
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y)?;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root(&c);
        for (g, k) in squarefree(&root)? {
            out.push((g, k * p));
        }
    }
    Ok(out)
}

/// For `c(x) = sum a_i x^(ip)`, returns `sum a_i^(1/p) x^i`.
fn pth_root(c: &Polynomial) -> Polynomial {
    let field = c.field();
    let p = field.characteristic() as usize;
    // a^(1/p) = a^(q/p) in GF(q).
    let e = (field.order() / field.characteristic()) as u128;
    let coeffs = c
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&a| field.pow(a, e))
        .collect();
    Polynomial::new(field, coeffs)
}

fn distinct_degree(f: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    let field = f.field();
    let q = field.order() as u128;
    let x = Polynomial::x(field);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(q, &rest)?;
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

fn equal_degree(
    f: &Polynomial,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Polynomial>,
) -> Result<()> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(());
    }
    if n == d {
        out.push(f.monic());
        return Ok(());
    }
    let field = f.field();
    loop {
        let a = random_poly(field, n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = splitting_element(&a, f, d)?;
        let g = f.gcd(&b);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = f.div_exact(&g)?;
            equal_degree(&g, d, rng, out)?;
            equal_degree(&h, d, rng, out)?;
            return Ok(());
        }
    }
}

fn random_poly(field: &FiniteField, len: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let q = field.order() as u32;
    let coeffs = (0..len).map(|_| Fe(rng.gen_range(0..q))).collect();
    Polynomial::new(field, coeffs)
}

/// Odd `q`: `a^((q^d - 1)/2) - 1`. Even `q = 2^m`: the trace `sum a^(2^j)`, `j < md`.
fn splitting_element(a: &Polynomial, f: &Polynomial, d: usize) -> Result<Polynomial> {
    let field = f.field();
    let q = field.order() as u128;
    if q % 2 == 1 {
        // (q^d - 1)/2 = ((q-1)/2) * (1 + q + ... + q^(d-1))
        let mut s = a.rem(f)?;
        let mut acc = Polynomial::one(field);
        for _ in 0..d {
            acc = acc.mul_mod(&s, f)?;
            s = s.pow_mod(q, f)?;
        }
        let b = acc.pow_mod((q - 1) / 2, f)?;
        Ok(b.sub(&Polynomial::one(field)))
    } else {
        let steps = field.degree() as usize * d;
        let mut s = a.rem(f)?;
        let mut acc = Polynomial::zero(field);
        for _ in 0..steps {
            acc = acc.add(&s);
            s = s.mul_mod(&s, f)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> FiniteField {
        FiniteField::new(p, m).unwrap()
    }

    fn ints(f: &FiniteField, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(f, c)
    }

    #[test]
    fn x7_minus_1_over_gf2() {
        let f = gf(2, 1);
        let fac = poly_factor(&Polynomial::x_pow_minus_one(&f, 7)).unwrap();
        let expected = vec![
            (ints(&f, &[1, 1]), 1),
            (ints(&f, &[1, 1, 0, 1]), 1),
            (ints(&f, &[1, 0, 1, 1]), 1),
        ];
        assert_eq!(fac.factors, expected);
    }

    #[test]
    fn x9_minus_1_over_gf2() {
        let f = gf(2, 1);
        let fac = poly_factor(&Polynomial::x_pow_minus_one(&f, 9)).unwrap();
        let expected = vec![
            (ints(&f, &[1, 1]), 1),
            (ints(&f, &[1, 1, 1]), 1),
            (ints(&f, &[1, 0, 0, 1, 0, 0, 1]), 1),
        ];
        assert_eq!(fac.factors, expected);
    }

    #[test]
    fn linear_is_its_own_factor() {
        for (p, m) in [(2, 1), (3, 2), (7, 1)] {
            let f = gf(p, m);
            let lin = ints(&f, &[-1, 1]);
            let fac = poly_factor(&lin).unwrap();
            assert_eq!(fac.factors, vec![(lin, 1)]);
        }
    }

    #[test]
    fn zero_is_rejected() {
        let f = gf(2, 1);
        assert_eq!(poly_factor(&Polynomial::zero(&f)).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn repeated_factors_and_leading_coefficient() {
        let f = gf(3, 1);
        // 2 (x+1)^3 (x^2+1)^2, the cube exercises the p-th root branch
        let a = ints(&f, &[1, 1]);
        let b = ints(&f, &[1, 0, 1]);
        let poly = a.mul(&a).mul(&a).mul(&b).mul(&b).scale(f.from_int(2));
        let fac = poly_factor(&poly).unwrap();
        assert_eq!(fac.leading, f.from_int(2));
        assert_eq!(fac.factors, vec![(a, 3), (b, 2)]);
        assert_eq!(fac.expand().unwrap(), poly);
    }

    #[test]
    fn remultiplies_over_extension_fields() {
        for (p, m, n) in [(2, 2, 15), (3, 2, 20), (2, 3, 21), (5, 1, 24), (2, 1, 63)] {
            let f = gf(p, m);
            let poly = Polynomial::x_pow_minus_one(&f, n).mul(&ints(&f, &[1, 0, 1]));
            let fac = poly_factor(&poly).unwrap();
            assert_eq!(fac.expand().unwrap(), poly, "GF({p}^{m}), n={n}");
            for (g, _) in &fac.factors {
                assert!(g.is_monic() && g.is_irreducible(), "{g}");
            }
        }
    }

    #[test]
    fn deterministic() {
        let f = gf(3, 2);
        let poly = Polynomial::x_pow_minus_one(&f, 40);
        assert_eq!(poly_factor(&poly).unwrap(), poly_factor(&poly).unwrap());
    }
}
