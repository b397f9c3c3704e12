mod common;

use common::gf;
use duadic::gf::{poly_factor, Fe, FiniteField, Polynomial};
use proptest::prelude::*;

const ORDERS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27];

fn field_and_elems(count: usize) -> impl Strategy<Value = (FiniteField, Vec<Fe>)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(move |q| {
        let f = gf(q);
        let elems: Vec<Fe> = f.elements().collect();
        (Just(f), prop::collection::vec(prop::sample::select(elems), count))
    })
}

proptest! {
    #[test]
    fn ring_axioms((f, xs) in field_and_elems(3)) {
        let (a, b, c) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
    }

    #[test]
    fn frobenius_is_additive((f, xs) in field_and_elems(2), t in 0u32..4) {
        let (a, b) = (xs[0], xs[1]);
        prop_assert_eq!(f.frobenius(f.add(a, b), t), f.add(f.frobenius(a, t), f.frobenius(b, t)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), t), f.mul(f.frobenius(a, t), f.frobenius(b, t)));
    }

    #[test]
    fn factorization_remultiplies((f, coeffs) in field_and_elems(9)) {
        let poly = Polynomial::new(&f, coeffs);
        prop_assume!(!poly.is_zero());
        let fac = poly_factor(&poly).unwrap();
        for (g, _) in &fac.factors {
            prop_assert!(g.is_monic() && g.is_irreducible());
        }
        let product = fac.expand().unwrap_or_else(|| Polynomial::constant(&f, fac.leading));
        prop_assert_eq!(product, poly);
    }
}

#[test]
fn fermat_little_theorem_exhaustive() {
    for q in (2..=256u64).filter(|&q| FiniteField::from_order(q).is_ok()) {
        let f = gf(q);
        for a in f.elements().filter(|a| !a.is_zero()) {
            assert_eq!(f.pow(a, (q - 1) as u128), f.one(), "GF({q})");
        }
    }
}

#[test]
fn construction_is_deterministic() {
    for q in ORDERS {
        assert_eq!(gf(q).modulus(), gf(q).modulus());
    }
}
