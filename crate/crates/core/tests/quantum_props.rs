mod common;

use common::{abelian, gf};
use duadic::codes::DEFAULT_ENUM_CAP;
use duadic::duadic::{construct_pairs, BoundKind, Mode};
use duadic::exec::Exec;
use duadic::gf::gcd;
use duadic::groups::{builtin_mu_minus1, builtin_mu_swap, Antiautomorphism, Group};
use duadic::quantum::{css_distance_uncollapsed, quantum_from_pair, Distance};

fn instances() -> Vec<(u64, Group, Antiautomorphism)> {
    let mut out = Vec::new();
    for n in (3..=31u32).step_by(2) {
        for q in [2u64, 3, 4, 5] {
            if gcd(n as u64, q) == 1 {
                let g = abelian(&[n]);
                out.push((q, g.clone(), builtin_mu_minus1(&g)));
            }
        }
    }
    for (p, q) in [(3u32, 2u64), (5, 2), (5, 3)] {
        let g = abelian(&[p, p]);
        out.push((q, g.clone(), builtin_mu_swap(&g, q).unwrap()));
    }
    out
}

#[test]
fn css_invariants_and_distance_bounds() {
    let cap = 1 << 16;
    for (q, g, mu) in instances() {
        let f = gf(q);
        let Ok(pairs) = construct_pairs(&mu, &f, &g, Mode::Canonical) else {
            continue;
        };
        let n = g.order();
        let qd = quantum_from_pair(pairs[0].clone(), cap, Exec::default()).unwrap();
        let css = &qd.css;
        assert_eq!(css.k(), css.d().dimension() - css.c().dimension());
        assert_eq!(css.k(), 1);
        assert!(css.x_stabilizers().mul(&css.z_stabilizers().transpose()).is_zero());
        match css.distance().unwrap() {
            Distance::Exact(d) => {
                let kind = if mu.is_mu_minus1() { BoundKind::SquareShift } else { BoundKind::Square };
                assert!(kind.holds(d, n), "n = {n}, q = {q}, d = {d}");
                let naive = css_distance_uncollapsed(css, cap, Exec::default()).unwrap();
                assert_eq!(naive, Distance::Exact(d));
            }
            Distance::LowerBound { d, .. } => assert_eq!(Some(d), css.bound().map(|b| b.d_min)),
        }
    }
}

#[test]
fn golay_like_length_23() {
    let f = gf(2);
    let g = abelian(&[23]);
    let pair = construct_pairs(&builtin_mu_minus1(&g), &f, &g, Mode::Canonical).unwrap().remove(0);
    let qd = quantum_from_pair(pair, DEFAULT_ENUM_CAP, Exec::default()).unwrap();
    assert_eq!(qd.css.parameters(), "[[23,1,7]]_2");
}
