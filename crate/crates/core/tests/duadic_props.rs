mod common;

use common::{abelian, frobenius_group, gf};
use duadic::algebra::{split_primitive_central_idempotents, AlgebraElement};
use duadic::codes::{odd_like_min_weight, DEFAULT_ENUM_CAP};
use duadic::duadic::{
    check_splitting, classify_duality, construct_pairs, duadic_codes, odd_like_bound, splitting_exists_mu_minus1,
    verify_key_proposition, DualityCase, Mode, Side,
};
use duadic::gf::{gcd, FiniteField};
use duadic::groups::{builtin_mu_minus1, builtin_mu_swap, Antiautomorphism, Group};
use duadic::Error;

const QS: [u64; 6] = [2, 3, 4, 5, 7, 9];

fn cells() -> Vec<(FiniteField, Group, Antiautomorphism)> {
    let mut out = Vec::new();
    for n in (3..=31u32).step_by(2) {
        for q in QS {
            if gcd(n as u64, q) == 1 {
                let g = abelian(&[n]);
                out.push((gf(q), g.clone(), builtin_mu_minus1(&g)));
            }
        }
    }
    for p in [3u32, 5] {
        let g = abelian(&[p, p]);
        for q in QS.into_iter().filter(|&q| gcd(p as u64, q) == 1) {
            out.push((gf(q), g.clone(), builtin_mu_minus1(&g)));
            out.push((gf(q), g.clone(), builtin_mu_swap(&g, q).unwrap()));
        }
    }
    let g21 = frobenius_group(7);
    for q in [2, 4, 5] {
        out.push((gf(q), g21.clone(), builtin_mu_minus1(&g21)));
    }
    out
}

#[test]
fn idempotent_and_class_levels_agree() {
    for (f, g, mu) in cells() {
        let check = check_splitting(&mu, &f, &g).unwrap();
        assert!(check.levels_agree(), "{} over {f} with {}", g.descriptor(), mu.name());
        assert!(verify_key_proposition(&mu, &f, &g).unwrap().equal());
    }
}

#[test]
fn cyclic_existence_matches_order_criterion() {
    for n in (3..=45u32).step_by(2) {
        for q in QS.into_iter().filter(|&q| gcd(n as u64, q) == 1) {
            let g = abelian(&[n]);
            let pairs = construct_pairs(&builtin_mu_minus1(&g), &gf(q), &g, Mode::Canonical);
            let expected = splitting_exists_mu_minus1(n as u64, q).unwrap();
            assert_eq!(pairs.is_ok(), expected, "n = {n}, q = {q}");
            if let Err(e) = pairs {
                assert!(matches!(e, Error::NoSplitting(_)));
            }
        }
    }
}

#[test]
fn pairs_satisfy_structure_and_bounds() {
    for (f, g, mu) in cells() {
        let Ok(pairs) = construct_pairs(&mu, &f, &g, Mode::Canonical) else {
            continue;
        };
        let n = g.order();
        for pair in pairs {
            let one = AlgebraElement::one(&f, &g);
            let zero = AlgebraElement::zero(&f, &g);
            assert_eq!(&(pair.e() + pair.f()) + pair.hat(), one);
            assert_eq!(pair.e() * pair.f(), zero);
            let codes = duadic_codes(&pair).unwrap();
            assert_eq!(codes.c_e.dimension(), (n - 1) / 2);
            assert_eq!(codes.d_f.dimension(), (n + 1) / 2);
            let duality = classify_duality(&pair, &codes).unwrap();
            assert!(duality.verified);
            let bound = odd_like_bound(&pair);
            match odd_like_min_weight(&codes, Side::E, DEFAULT_ENUM_CAP) {
                Ok(m) => {
                    assert!(bound.kind.holds(m.weight, n), "n = {n}, q = {f}: d_o = {}", m.weight);
                    assert!(m.weight >= bound.d_min);
                    let other = odd_like_min_weight(&codes, Side::F, DEFAULT_ENUM_CAP).unwrap();
                    assert_eq!(other.weight, m.weight);
                }
                Err(Error::CapExceeded { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn enumerate_all_counts_and_validity() {
    for (f, g, mu) in cells() {
        let Ok(all) = construct_pairs(&mu, &f, &g, Mode::EnumerateAll) else {
            continue;
        };
        let set = split_primitive_central_idempotents(&f, &g).unwrap();
        let cycles = (set.len() - 1) / 2;
        assert_eq!(all.len(), 1 << (cycles - 1), "{} over {f}", g.descriptor());
        for (i, p) in all.iter().enumerate() {
            for q in &all[i + 1..] {
                assert!(p.e() != q.e() && p.e() != q.f());
            }
        }
        let canonical = construct_pairs(&mu, &f, &g, Mode::Canonical).unwrap();
        assert_eq!(canonical[0], all[0]);
    }
}

#[test]
fn duality_cases_follow_mu_minus1() {
    let f = gf(2);
    let g = abelian(&[7]);
    let pair = construct_pairs(&builtin_mu_minus1(&g), &f, &g, Mode::Canonical).unwrap().remove(0);
    assert_eq!(classify_duality(&pair, &duadic_codes(&pair).unwrap()).unwrap().case, DualityCase::Swapped);

    let g = abelian(&[3, 3]);
    let mu = builtin_mu_swap(&g, 2).unwrap();
    for pair in construct_pairs(&mu, &f, &g, Mode::EnumerateAll).unwrap() {
        let report = classify_duality(&pair, &duadic_codes(&pair).unwrap()).unwrap();
        assert_eq!(report.case, DualityCase::Fixed);
        assert!(report.verified);
    }
}
