//! The group algebra `F_q[G]` and its centrally primitive idempotents.
//!
//! [`split_primitive_central_idempotents`] decomposes the center: it takes
//! the subalgebra `B = { z in Z(F_q[G]) : z^q = z }`, which is a product of
//! copies of `F_q`, one per simple component, and repeatedly splits the
//! current unit along the roots of the minimal polynomial of a non-scalar
//! element of `B`. [`abelian_character_idempotents`] rebuilds the same set
//! from character sums for abelian groups and serves as an independent check.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::gf::linalg::Matrix;
use crate::gf::{gcd, poly_factor, prime_factors, Fe, FiniteField, Polynomial};
use crate::groups::{fq_classes, Antiautomorphism, Group};
use crate::{Error, Result};

/// An element `sum a_g g` of `F_q[G]`, coefficients indexed by element id.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    field: FiniteField,
    group: Group,
    coeffs: Vec<Fe>,
}

impl AlgebraElement {
    pub fn zero(field: &FiniteField, group: &Group) -> Self {
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs: vec![Fe::ZERO; group.order()],
        }
    }

    pub fn one(field: &FiniteField, group: &Group) -> Self {
        Self::basis(field, group, group.identity())
    }

    pub fn basis(field: &FiniteField, group: &Group, g: u32) -> Self {
        let mut e = Self::zero(field, group);
        e.coeffs[g as usize] = Fe::ONE;
        e
    }

    pub fn from_coeffs(field: &FiniteField, group: &Group, coeffs: Vec<Fe>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::LengthMismatch(coeffs.len(), group.order()));
        }
        if coeffs.iter().any(|&c| !field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs,
        })
    }

    /// Sum of the listed group elements, each with coefficient one.
    pub fn from_support(field: &FiniteField, group: &Group, support: &[u32]) -> Self {
        let mut e = Self::zero(field, group);
        for &g in support {
            e.coeffs[g as usize] = field.add(e.coeffs[g as usize], Fe::ONE);
        }
        e
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coefficient(&self, g: u32) -> Fe {
        self.coeffs[g as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn support(&self) -> Vec<u32> {
        self.group.elements().filter(|&g| !self.coeffs[g as usize].is_zero()).collect()
    }

    /// Coefficient sum; the element is annihilated by the trivial idempotent iff this is zero.
    pub fn augmentation(&self) -> Fe {
        self.coeffs.iter().fold(Fe::ZERO, |acc, &c| self.field.add(acc, c))
    }

    pub fn is_even_like(&self) -> bool {
        self.augmentation().is_zero()
    }

    pub fn is_odd_like(&self) -> bool {
        !self.is_even_like()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(self.with_coeffs(coeffs))
    }

    /// Convolution product: the coefficient of `g` is `sum_h a_h b_(h^-1 g)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let g = &self.group;
        let mut out = vec![Fe::ZERO; g.order()];
        for (x, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (y, &b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let xy = g.mul(x as u32, y as u32) as usize;
                out[xy] = f.add(out[xy], f.mul(a, b));
            }
        }
        Ok(self.with_coeffs(out))
    }

    pub fn scale(&self, c: Fe) -> Self {
        let f = &self.field;
        self.with_coeffs(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field, &self.group);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `g * self`.
    pub fn left_translate(&self, g: u32) -> Self {
        let mut out = vec![Fe::ZERO; self.coeffs.len()];
        for (x, &a) in self.coeffs.iter().enumerate() {
            out[self.group.mul(g, x as u32) as usize] = a;
        }
        self.with_coeffs(out)
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    /// Commutes with every basis element (enough by linearity).
    pub fn is_central(&self) -> bool {
        let g = &self.group;
        g.elements().all(|h| {
            self.coeffs
                .iter()
                .enumerate()
                .all(|(x, &a)| a == self.coeffs[g.conjugate(x as u32, h) as usize])
        })
    }

    fn with_coeffs(&self, coeffs: Vec<Fe>) -> Self {
        AlgebraElement {
            field: self.field.clone(),
            group: self.group.clone(),
            coeffs,
        }
    }

    /// Embeds `a in F_q[G1]` into `F_q[G1 x G2]` (ids `g1 + |G1| g2`) as `a (x) 1`.
    pub fn embed_left(&self, product: &Group) -> Result<Self> {
        if product.order() % self.group.order() != 0 {
            return Err(Error::GroupMismatch);
        }
        let mut coeffs = vec![Fe::ZERO; product.order()];
        coeffs[..self.coeffs.len()].copy_from_slice(&self.coeffs);
        Self::from_coeffs(&self.field, product, coeffs)
    }

    /// Embeds `a in F_q[G2]` into `F_q[G1 x G2]` as `1 (x) a`.
    pub fn embed_right(&self, product: &Group) -> Result<Self> {
        let n2 = self.group.order();
        if product.order() % n2 != 0 {
            return Err(Error::GroupMismatch);
        }
        let n1 = product.order() / n2;
        let mut coeffs = vec![Fe::ZERO; product.order()];
        for (g, &a) in self.coeffs.iter().enumerate() {
            coeffs[g * n1] = a;
        }
        Self::from_coeffs(&self.field, product, coeffs)
    }

    /// Nonzero terms as `label: coefficient` strings.
    pub fn terms(&self) -> Vec<String> {
        self.group
            .elements()
            .filter(|&g| !self.coeffs[g as usize].is_zero())
            .map(|g| format!("{}: {}", self.group.label(g), self.field.format(self.coeffs[g as usize])))
            .collect()
    }

    /// Ordering key used for canonical choices: the `(index, value)` list of
    /// nonzero coefficients, compared lexicographically.
    pub fn support_key(&self) -> Vec<(u32, u32)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c.index()))
            .collect()
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.terms().join(", "))
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.terms().join(", "))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &AlgebraElement {
            type Output = AlgebraElement;
            /// Panics if the operands live in different algebras.
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$checked(rhs).expect("operands from the same group algebra")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        let f = &self.field;
        self.with_coeffs(self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }
}

pub fn alg_mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.checked_mul(b)
}

pub fn is_even_like(a: &AlgebraElement) -> bool {
    a.is_even_like()
}

pub fn is_central(a: &AlgebraElement) -> bool {
    a.is_central()
}

/// `N^ = |N|^-1 sum_(g in N) g`.
pub fn hat_subgroup(field: &FiniteField, group: &Group, subgroup: &[u32]) -> Result<AlgebraElement> {
    let mut members = subgroup.to_vec();
    members.sort_unstable();
    members.dedup();
    let is_member = |g: u32| members.binary_search(&g).is_ok();
    if members.is_empty()
        || members.iter().any(|&g| g as usize >= group.order())
        || !is_member(group.identity())
        || members.iter().any(|&g| !is_member(group.inv(g)))
        || members.iter().any(|&g| members.iter().any(|&h| !is_member(group.mul(g, h))))
    {
        return Err(Error::NotSubgroup);
    }
    let size = field
        .inv(field.from_int(members.len() as i64))
        .ok_or(Error::OrderNotInvertible(members.len()))?;
    Ok(AlgebraElement::from_support(field, group, &members).scale(size))
}

/// The trivial idempotent `G^`.
pub fn group_hat(field: &FiniteField, group: &Group) -> Result<AlgebraElement> {
    let all: Vec<u32> = group.elements().collect();
    hat_subgroup(field, group, &all)
}

/// `mu(sum a_g g) = sum sigma(a_g) mu_*(g)`.
pub fn apply_antiauto(mu: &Antiautomorphism, a: &AlgebraElement) -> Result<AlgebraElement> {
    if mu.group() != a.group() {
        return Err(Error::GroupMismatch);
    }
    let f = &a.field;
    let mut out = vec![Fe::ZERO; a.coeffs.len()];
    for (g, &c) in a.coeffs.iter().enumerate() {
        out[mu.apply(g as u32) as usize] = f.frobenius(c, mu.frobenius_power());
    }
    Ok(a.with_coeffs(out))
}

/// The centrally primitive idempotents of `F_q[G]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet {
    idempotents: Vec<AlgebraElement>,
    trivial: usize,
}

impl IdempotentSet {
    fn from_unsorted(mut idempotents: Vec<AlgebraElement>, hat: &AlgebraElement) -> Result<Self> {
        idempotents.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        let trivial = idempotents
            .iter()
            .position(|e| e == hat)
            .ok_or_else(|| Error::Internal("trivial idempotent missing".into()))?;
        Ok(IdempotentSet { idempotents, trivial })
    }

    pub fn idempotents(&self) -> &[AlgebraElement] {
        &self.idempotents
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    pub fn trivial_index(&self) -> usize {
        self.trivial
    }

    pub fn trivial(&self) -> &AlgebraElement {
        &self.idempotents[self.trivial]
    }

    /// Indices of the idempotents other than `G^`.
    pub fn nontrivial_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| i != self.trivial)
    }

    pub fn position(&self, e: &AlgebraElement) -> Option<usize> {
        self.idempotents.iter().position(|x| x == e)
    }

    /// Exact check: idempotent, central, nonzero, pairwise orthogonal, summing
    /// to one, and as many members as `F_q`-conjugacy classes.
    pub fn verify(&self) -> Result<()> {
        let first = self.idempotents.first().ok_or_else(|| Error::Internal("empty idempotent set".into()))?;
        let (field, group) = (first.field.clone(), first.group.clone());
        let mut sum = AlgebraElement::zero(&field, &group);
        for (i, e) in self.idempotents.iter().enumerate() {
            if e.is_zero() || !e.is_idempotent() || !e.is_central() {
                return Err(Error::Internal(format!("member {i} is not a nonzero central idempotent")));
            }
            for (j, f) in self.idempotents.iter().enumerate().skip(i + 1) {
                if !(e * f).is_zero() {
                    return Err(Error::Internal(format!("members {i} and {j} are not orthogonal")));
                }
            }
            sum = &sum + e;
        }
        if sum != AlgebraElement::one(&field, &group) {
            return Err(Error::Internal("idempotents do not sum to one".into()));
        }
        let classes = fq_classes(&group, field.order())?;
        if classes.len() != self.len() {
            return Err(Error::Internal(format!(
                "{} idempotents but {} F_q-conjugacy classes",
                self.len(),
                classes.len()
            )));
        }
        Ok(())
    }
}

fn check_coprime(field: &FiniteField, group: &Group) -> Result<()> {
    let (n, q) = (group.order() as u64, field.order());
    let g = gcd(n, q);
    if g != 1 {
        return Err(Error::NotCoprime { a: q, b: n, gcd: g });
    }
    Ok(())
}

fn coeff_matrix(field: &FiniteField, n: usize, elems: &[AlgebraElement]) -> Matrix {
    Matrix::from_rows(field, n, elems.iter().map(|e| e.coeffs.clone()).collect())
}

/// Centrally primitive idempotents by splitting the Frobenius-fixed part of the center.
pub fn split_primitive_central_idempotents(field: &FiniteField, group: &Group) -> Result<IdempotentSet> {
    check_coprime(field, group)?;
    let n = group.order();
    let q = field.order();
    let hat = group_hat(field, group)?;

    let classes = group.conjugacy_classes();
    let class_sums: Vec<AlgebraElement> = classes
        .classes()
        .iter()
        .map(|c| AlgebraElement::from_support(field, group, c))
        .collect();
    // Rows: coordinates of z^q - z in the class-sum basis (central elements are
    // constant on classes, so the coordinate is the coefficient at the representative).
    let r = class_sums.len();
    let mut frob = Matrix::zeros(field, r, r);
    for (i, z) in class_sums.iter().enumerate() {
        let image = &z.pow(q) - z;
        for j in 0..r {
            frob.set(i, j, image.coefficient(classes.representative(j)));
        }
    }
    let fixed: Vec<AlgebraElement> = frob
        .transpose()
        .nullspace()
        .row_iter()
        .map(|c| {
            c.iter()
                .zip(&class_sums)
                .fold(AlgebraElement::zero(field, group), |acc, (&ci, z)| &acc + &z.scale(ci))
        })
        .collect();

    let mut done = Vec::new();
    let mut pending = vec![AlgebraElement::one(field, group)];
    while let Some(unit) = pending.pop() {
        let restricted: Vec<AlgebraElement> = fixed.iter().map(|b| b * &unit).collect();
        if coeff_matrix(field, n, &restricted).rank() == 1 {
            done.push(unit);
            continue;
        }
        let pivot = unit
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal("zero unit in splitting".into()))?;
        let unit_pivot_inv = field.inv(unit.coeffs[pivot]).expect("nonzero");
        let x = restricted
            .into_iter()
            .find(|x| {
                let s = field.mul(x.coeffs[pivot], unit_pivot_inv);
                x != &unit.scale(s)
            })
            .ok_or_else(|| Error::Internal("no non-scalar element in a split component".into()))?;
        pending.extend(split_unit(field, &unit, &x)?);
    }
    let set = IdempotentSet::from_unsorted(done, &hat)?;
    Ok(set)
}

/// Splits `unit` into orthogonal idempotents along the eigenvalues of `x`
/// (an element of `unit * B`, where `x^q = x`).
fn split_unit(field: &FiniteField, unit: &AlgebraElement, x: &AlgebraElement) -> Result<Vec<AlgebraElement>> {
    let n = unit.coeffs.len();
    let mut powers = vec![unit.clone()];
    let minpoly = loop {
        let next = powers.last().expect("nonempty") * x;
        powers.push(next);
        let relations = coeff_matrix(field, n, &powers).transpose().nullspace();
        if relations.rows() > 0 {
            break Polynomial::new(field, relations.row(0).to_vec()).monic();
        }
    };
    let factors = poly_factor(&minpoly)?;
    let roots: Vec<Fe> = factors
        .factors
        .iter()
        .map(|(f, mult)| {
            if f.degree() != Some(1) || *mult != 1 {
                return Err(Error::Internal(format!("minimal polynomial {minpoly} does not split")));
            }
            Ok(field.neg(f.coeffs()[0]))
        })
        .collect::<Result<_>>()?;
    Ok(roots
        .iter()
        .map(|&lj| {
            roots.iter().filter(|&&li| li != lj).fold(unit.clone(), |acc, &li| {
                let denom = field.inv(field.sub(lj, li)).expect("distinct roots");
                let factor = &(x - &unit.scale(li)) * &acc;
                factor.scale(denom)
            })
        })
        .collect())
}

/// Centrally primitive idempotents of an abelian group algebra from
/// character orbit sums `|G|^-1 sum_(chi in orbit) sum_g chi(g^-1) g`.
///
/// Character values live in `F_q[x]/(phi)` with `phi` an irreducible factor
/// of `x^m - 1` whose roots have order exactly `m`, so `x` itself is the
/// primitive `m`-th root of unity and `F_q` embeds as the constants.
pub fn abelian_character_idempotents(field: &FiniteField, group: &Group) -> Result<IdempotentSet> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let shape = group
        .abelian_shape()
        .ok_or_else(|| Error::Unsupported("abelian group without a cyclic decomposition".into()))?
        .to_vec();
    check_coprime(field, group)?;
    let n = group.order();
    let m = group.exponent() as usize;
    let phi = primitive_cyclotomic_factor(field, m)?;
    let x = Polynomial::x(field).rem(&phi)?;
    let delta_pows: Vec<Polynomial> = (0..m)
        .scan(Polynomial::one(field).rem(&phi)?, |acc, _| {
            let cur = acc.clone();
            *acc = acc.mul_mod(&x, &phi).expect("nonzero modulus");
            Some(cur)
        })
        .collect();
    let n_inv = field.inv(field.from_int(n as i64)).expect("coprime");

    let exps: Vec<Vec<u32>> = group.elements().map(|g| group.exponents(g).expect("shaped")).collect();
    let pairing = |u: usize, g: usize| -> usize {
        exps[u]
            .iter()
            .zip(&exps[g])
            .zip(&shape)
            .map(|((&a, &b), &o)| a as usize * b as usize * (m / o as usize))
            .sum::<usize>()
            % m
    };
    // The dual group has the same shape and Galois acts by u -> q u, so its
    // orbits are exactly the F_q-conjugacy classes of G under this labelling.
    let orbits = fq_classes(group, field.order())?;
    let idempotents = orbits
        .classes()
        .iter()
        .map(|orbit| {
            let coeffs = (0..n)
                .map(|g| {
                    let sum = orbit.iter().fold(Polynomial::zero(field), |acc, &u| {
                        acc.add(&delta_pows[(m - pairing(u as usize, g)) % m])
                    });
                    match sum.degree() {
                        None => Ok(Fe::ZERO),
                        Some(0) => Ok(field.mul(sum.coeffs()[0], n_inv)),
                        Some(_) => Err(Error::Internal("character sum outside the base field".into())),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            AlgebraElement::from_coeffs(field, group, coeffs)
        })
        .collect::<Result<Vec<_>>>()?;
    IdempotentSet::from_unsorted(idempotents, &group_hat(field, group)?)
}

/// An irreducible factor of `x^m - 1` over `field` whose roots have order exactly `m`.
fn primitive_cyclotomic_factor(field: &FiniteField, m: usize) -> Result<Polynomial> {
    let divisors: Vec<u64> = prime_factors(m as u64);
    let one = Polynomial::one(field);
    for (phi, _) in poly_factor(&Polynomial::x_pow_minus_one(field, m))?.factors {
        let x = Polynomial::x(field);
        let primitive = divisors.iter().all(|&r| {
            let v = x.pow_mod((m as u64 / r) as u128, &phi).expect("nonzero modulus");
            v.sub(&one).rem(&phi).map(|d| !d.is_zero()).unwrap_or(false)
        });
        if primitive {
            return Ok(phi);
        }
    }
    Err(Error::Internal(format!("x^{m} - 1 has no primitive factor")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::fixtures::frobenius_group;
    use crate::groups::{builtin_mu_minus1, builtin_mu_swap};

    fn gf(q: u64) -> FiniteField {
        FiniteField::from_order(q).unwrap()
    }

    fn z(orders: &[u32]) -> Group {
        Group::abelian(orders).unwrap()
    }

    /// Element of F_q[Z_n] from exponents with unit coefficients.
    fn cyc(f: &FiniteField, g: &Group, exps: &[u32]) -> AlgebraElement {
        AlgebraElement::from_support(f, g, exps)
    }

    fn ab(g: &Group, terms: &[(u32, u32)]) -> Vec<u32> {
        terms.iter().map(|&(x, y)| g.from_exponents(&[x, y]).unwrap()).collect()
    }

    #[test]
    fn unit_and_frobenius_square() {
        let f = gf(2);
        let g = z(&[7]);
        let a = cyc(&f, &g, &[0, 1, 2, 4]);
        assert_eq!(&a * &AlgebraElement::one(&f, &g), a);
        assert_eq!(&a * &a, a);
    }

    #[test]
    fn swap_idempotent_e1() {
        let f = gf(2);
        let g = z(&[3, 3]);
        let e1 = AlgebraElement::from_support(&f, &g, &ab(&g, &[(1, 0), (2, 0), (1, 1), (2, 2)]));
        assert!(e1.is_idempotent());
        assert!(e1.is_even_like());
    }

    #[test]
    fn context_mismatch() {
        let a = AlgebraElement::one(&gf(2), &z(&[7]));
        let b = AlgebraElement::one(&gf(3), &z(&[7]));
        let c = AlgebraElement::one(&gf(2), &z(&[5]));
        assert_eq!(a.checked_mul(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.checked_add(&c).unwrap_err(), Error::GroupMismatch);
    }

    #[test]
    fn hat_subgroups() {
        let f = gf(2);
        let g = z(&[7]);
        assert_eq!(hat_subgroup(&f, &g, &[0]).unwrap(), AlgebraElement::one(&f, &g));
        let all: Vec<u32> = g.elements().collect();
        assert_eq!(hat_subgroup(&f, &g, &all).unwrap(), cyc(&f, &g, &all));
        let g9 = z(&[3, 3]);
        let hat = group_hat(&f, &g9).unwrap();
        assert_eq!(hat.weight(), 9);
        assert!(hat.is_idempotent());
        assert_eq!(hat_subgroup(&f, &g, &[0, 1]).unwrap_err(), Error::NotSubgroup);
        let z3 = z(&[3]);
        assert_eq!(
            hat_subgroup(&gf(3), &z3, &[0, 1, 2]).unwrap_err(),
            Error::OrderNotInvertible(3)
        );
    }

    #[test]
    fn even_like() {
        let f = gf(2);
        let g = z(&[7]);
        assert!(AlgebraElement::zero(&f, &g).is_even_like());
        assert!(!cyc(&f, &g, &[0, 1, 3]).is_even_like());
    }

    #[test]
    fn antiautomorphism_action() {
        let f = gf(2);
        let g = z(&[7]);
        let a = cyc(&f, &g, &[0, 1, 2, 4]);
        let mu = builtin_mu_minus1(&g);
        assert_eq!(apply_antiauto(&mu, &a).unwrap(), cyc(&f, &g, &[0, 3, 5, 6]));

        let g9 = z(&[3, 3]);
        let e1 = AlgebraElement::from_support(&f, &g9, &ab(&g9, &[(1, 0), (2, 0), (1, 1), (2, 2)]));
        let f1 = AlgebraElement::from_support(&f, &g9, &ab(&g9, &[(0, 1), (0, 2), (1, 2), (2, 1)]));
        let swap = builtin_mu_swap(&g9, 2).unwrap();
        assert_eq!(apply_antiauto(&swap, &e1).unwrap(), f1);
        assert_eq!(apply_antiauto(&builtin_mu_minus1(&g9), &e1).unwrap(), e1);
        assert_eq!(apply_antiauto(&mu, &e1).unwrap_err(), Error::GroupMismatch);
    }

    #[test]
    fn centrality() {
        let f = gf(2);
        let g = frobenius_group(7);
        assert!(group_hat(&f, &g).unwrap().is_central());
        // a (id 1) and b (id 7) do not commute
        assert_ne!(g.mul(1, 7), g.mul(7, 1));
        assert!(!AlgebraElement::basis(&f, &g, 1).is_central());
        assert!(cyc(&f, &z(&[7]), &[1, 3]).is_central());
    }

    #[test]
    fn split_z7_over_gf2() {
        let f = gf(2);
        let g = z(&[7]);
        let set = split_primitive_central_idempotents(&f, &g).unwrap();
        set.verify().unwrap();
        let all: Vec<u32> = g.elements().collect();
        let mut expected = vec![cyc(&f, &g, &all), cyc(&f, &g, &[0, 1, 2, 4]), cyc(&f, &g, &[0, 3, 5, 6])];
        expected.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        assert_eq!(set.idempotents(), &expected[..]);
        assert_eq!(set.trivial(), &cyc(&f, &g, &all));
        // Three idempotents, as many as irreducible factors of x^7 - 1.
        let factors = poly_factor(&Polynomial::x_pow_minus_one(&f, 7)).unwrap();
        assert_eq!(factors.factors.len(), set.len());
    }

    #[test]
    fn split_z3xz3_over_gf2() {
        let f = gf(2);
        let g = z(&[3, 3]);
        let set = split_primitive_central_idempotents(&f, &g).unwrap();
        set.verify().unwrap();
        assert_eq!(set.len(), 5);
        assert_eq!(set, abelian_character_idempotents(&f, &g).unwrap());
    }

    #[test]
    fn split_trivial_group() {
        let f = gf(5);
        let set = split_primitive_central_idempotents(&f, &Group::trivial()).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set.trivial(), &AlgebraElement::one(&f, &Group::trivial()));
    }

    #[test]
    fn split_nonabelian() {
        for q in [2, 4, 5, 8] {
            let f = gf(q);
            let g = frobenius_group(7);
            let set = split_primitive_central_idempotents(&f, &g).unwrap();
            set.verify().unwrap();
        }
    }

    #[test]
    fn split_rejects_non_coprime() {
        assert!(matches!(
            split_primitive_central_idempotents(&gf(3), &z(&[3])),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn character_oracle_z7() {
        let f = gf(2);
        let g = z(&[7]);
        let set = abelian_character_idempotents(&f, &g).unwrap();
        assert!(set.position(&cyc(&f, &g, &[0, 1, 2, 4])).is_some());
        assert_eq!(set.trivial().weight(), 7);
        assert_eq!(abelian_character_idempotents(&f, &frobenius_group(7)).unwrap_err(), Error::NotAbelian);
    }

    #[test]
    fn oracle_agrees_over_extension_fields() {
        for (q, shape) in [(4, vec![5, 3]), (9, vec![4, 2]), (3, vec![8]), (7, vec![2, 2, 2]), (5, vec![11]), (5, vec![79]), (7, vec![71])] {
            let f = gf(q);
            let g = z(&shape);
            let a = split_primitive_central_idempotents(&f, &g).unwrap();
            let b = abelian_character_idempotents(&f, &g).unwrap();
            a.verify().unwrap();
            assert_eq!(a, b, "q={q} shape={shape:?}");
        }
    }

    #[test]
    fn idempotent_set_is_mu_stable() {
        let f = gf(2);
        let g = z(&[3, 3]);
        let set = split_primitive_central_idempotents(&f, &g).unwrap();
        for mu in [builtin_mu_minus1(&g), builtin_mu_swap(&g, 2).unwrap()] {
            for e in set.idempotents() {
                assert!(set.position(&apply_antiauto(&mu, e).unwrap()).is_some());
            }
        }
    }

    #[test]
    fn embeddings_into_products() {
        let f = gf(2);
        let g1 = z(&[3, 3]);
        let prod = Group::direct_product(&g1, &g1).unwrap();
        let e1 = AlgebraElement::from_support(&f, &g1, &ab(&g1, &[(1, 0), (2, 0), (1, 1), (2, 2)]));
        let left = e1.embed_left(&prod).unwrap();
        let right = e1.embed_right(&prod).unwrap();
        assert!(left.is_idempotent() && right.is_idempotent());
        assert_eq!(left.weight(), 4);
        assert_eq!((&left * &right).weight(), 16);
    }

    #[test]
    fn text_form() {
        let f = gf(2);
        let g = z(&[3, 3]);
        let a = AlgebraElement::basis(&f, &g, g.from_exponents(&[1, 0]).unwrap());
        assert_eq!(a.terms(), vec!["a^1*b^0: 1".to_string()]);
    }
}
