//! Verification suites over built-in instance matrices.

use std::fmt::Write as _;

use duadic::algebra::{abelian_character_idempotents, apply_antiauto, split_primitive_central_idempotents, AlgebraElement};
use duadic::codes::{dual, odd_like_min_weight, subcode_check, DEFAULT_ENUM_CAP};
use duadic::duadic::{
    classify_duality, construct_pairs, duadic_codes, odd_like_bound, product_duadic, splitting_exists_mu_minus1,
    verify_key_proposition, BoundKind, DualityCase, DuadicPair, Mode, Side,
};
use duadic::exec::Exec;
use duadic::gf::{gcd, FiniteField};
use duadic::groups::{builtin_mu_minus1, builtin_mu_swap, Antiautomorphism, Group};
use duadic::quantum::{quantum_from_pair, Distance};
use duadic::Error;
use serde::{Deserialize, Serialize};

use crate::commands::existence;
use crate::error::{CliError, Result};
use crate::spec::frobenius_21;

pub const SUITES: [&str; 8] = ["key-prop", "existence", "structure", "duality", "bounds", "paper-81", "css", "oracle"];

/// Field orders used by the built-in matrices.
pub const FIELD_ORDERS: [u64; 6] = [2, 3, 4, 5, 7, 9];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

struct Recorder {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder {
            suite,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite.into(),
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records an error from the library as a failed check.
    fn result<T>(&mut self, label: &str, r: duadic::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(label, false, e.to_string());
                None
            }
        }
    }
}

/// A `(G, q, mu)` instance of a built-in matrix.
#[derive(Clone)]
pub struct Instance {
    pub label: String,
    pub field: FiniteField,
    pub group: Group,
    pub mu: Antiautomorphism,
}

fn gf(q: u64) -> FiniteField {
    FiniteField::from_order(q).expect("built-in field orders are prime powers")
}

fn abelian(orders: &[u32]) -> Group {
    Group::abelian(orders).expect("built-in shapes are valid")
}

fn instance(group: &Group, q: u64, mu: Antiautomorphism) -> Instance {
    Instance {
        label: format!("{} q={} {}", group.descriptor(), q, mu.name()),
        field: gf(q),
        group: group.clone(),
        mu,
    }
}

/// Cyclic `Z_n` (odd n <= 31) with `mu_-1`; `Z3xZ3` and `Z5xZ5` with `mu_-1`
/// and the swap; the order-21 nonabelian group with `mu_-1`. Every field
/// order coprime to `n` is used.
pub fn builtin_matrix() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in (3..=31u32).step_by(2) {
        let g = abelian(&[n]);
        for q in FIELD_ORDERS.into_iter().filter(|&q| gcd(n as u64, q) == 1) {
            out.push(instance(&g, q, builtin_mu_minus1(&g)));
        }
    }
    for p in [3u32, 5] {
        let g = abelian(&[p, p]);
        for q in FIELD_ORDERS.into_iter().filter(|&q| gcd(p as u64, q) == 1) {
            out.push(instance(&g, q, builtin_mu_minus1(&g)));
            out.push(instance(&g, q, builtin_mu_swap(&g, q).expect("p is an odd prime")));
        }
    }
    let g21 = frobenius_21();
    for q in FIELD_ORDERS.into_iter().filter(|&q| gcd(21, q) == 1) {
        out.push(instance(&g21, q, builtin_mu_minus1(&g21)));
    }
    out
}

fn key_prop(exec: Exec) -> Vec<Check> {
    let results = exec.map_collect(&builtin_matrix(), |inst| {
        let mut rec = Recorder::new("key-prop");
        if let Some(c) = rec.result(&inst.label, verify_key_proposition(&inst.mu, &inst.field, &inst.group)) {
            rec.check(
                &inst.label,
                c.equal(),
                format!("fixed classes {}, fixed idempotents {}", c.fixed_classes, c.fixed_idempotents),
            );
        }
        rec.checks
    });
    results.into_iter().flatten().collect()
}

/// Cyclic cells of the existence sweep: odd `n` in `3..=45`, coprime `q`.
pub fn existence_cells() -> Vec<(u32, u64)> {
    (3..=45u32)
        .step_by(2)
        .flat_map(|n| FIELD_ORDERS.into_iter().filter(move |&q| gcd(n as u64, q) == 1).map(move |q| (n, q)))
        .collect()
}

fn existence_suite(exec: Exec) -> Vec<Check> {
    let mut cells: Vec<Instance> = existence_cells()
        .into_iter()
        .map(|(n, q)| {
            let g = abelian(&[n]);
            instance(&g, q, builtin_mu_minus1(&g))
        })
        .collect();
    cells.extend(builtin_matrix().into_iter().filter(|i| !i.group.is_abelian() || i.group.abelian_shape().map_or(0, |s| s.len()) > 1));
    let results = exec.map_collect(&cells, |inst| {
        let mut rec = Recorder::new("existence");
        let built = construct_pairs(&inst.mu, &inst.field, &inst.group, Mode::Canonical);
        match existence(&inst.mu, &inst.field, &inst.group) {
            Ok(ex) => {
                rec.check(
                    format!("{}: construction matches criterion", inst.label),
                    built.is_ok() == ex.splits,
                    ex.diagnostics.clone(),
                );
                if let Some(agree) = ex.agreement {
                    rec.check(format!("{}: order test agrees", inst.label), agree, ex.diagnostics);
                }
            }
            Err(e) => rec.check(&inst.label, false, e.to_string()),
        }
        if inst.group.abelian_shape().is_some_and(|s| s.len() == 1) {
            let n = inst.group.order() as u64;
            let expected = splitting_exists_mu_minus1(n, inst.field.order());
            rec.check(
                format!("{}: pairs iff ord odd", inst.label),
                expected.as_ref().ok() == Some(&built.is_ok()),
                format!("{expected:?}"),
            );
        }
        rec.checks
    });
    results.into_iter().flatten().collect()
}

fn pair_structure(rec: &mut Recorder, label: &str, pair: &DuadicPair) {
    let (f, g) = (pair.field(), pair.group());
    let n = pair.n();
    let one = AlgebraElement::one(f, g);
    let zero = AlgebraElement::zero(f, g);
    let (e, ff) = (pair.e(), pair.f());
    let mu_ok = apply_antiauto(pair.mu(), e).ok().as_ref() == Some(ff);
    rec.check(
        format!("{label}: idempotent relations"),
        e * e == *e
            && ff * ff == *ff
            && e * ff == zero
            && ff * e == zero
            && e * pair.hat() == zero
            && &(e + ff) + pair.hat() == one
            && mu_ok,
        "",
    );
    let Some(codes) = rec.result(label, duadic_codes(pair)) else {
        return;
    };
    let dims = (codes.c_e.dimension(), codes.c_f.dimension(), codes.d_e.dimension(), codes.d_f.dimension());
    rec.check(
        format!("{label}: dimensions"),
        dims == ((n - 1) / 2, (n - 1) / 2, (n + 1) / 2, (n + 1) / 2),
        format!("{dims:?}"),
    );
    let nested = subcode_check(&codes.c_e, &codes.d_e).unwrap_or(false) && subcode_check(&codes.c_f, &codes.d_f).unwrap_or(false);
    rec.check(format!("{label}: inclusions"), nested, "");
}

fn structure(exec: Exec) -> Vec<Check> {
    let results = exec.map_collect(&builtin_matrix(), |inst| {
        let mut rec = Recorder::new("structure");
        match construct_pairs(&inst.mu, &inst.field, &inst.group, Mode::EnumerateAll) {
            Ok(pairs) => {
                for (i, pair) in pairs.iter().enumerate() {
                    pair_structure(&mut rec, &format!("{} pair {i}", inst.label), pair);
                }
            }
            Err(Error::NoSplitting(_)) => {}
            Err(e) => rec.check(&inst.label, false, e.to_string()),
        }
        rec.checks
    });
    results.into_iter().flatten().collect()
}

fn duality(exec: Exec) -> Vec<Check> {
    let mut rec = Recorder::new("duality");
    let f = gf(2);
    let z7 = abelian(&[7]);
    if let Some(pairs) = rec.result("Z7 q=2", construct_pairs(&builtin_mu_minus1(&z7), &f, &z7, Mode::Canonical)) {
        if let Some(codes) = rec.result("Z7 q=2", duadic_codes(&pairs[0])) {
            let ok = dual(&codes.c_e).ok().as_ref() == Some(&codes.d_e);
            rec.check("Z7 q=2: dual(C_e) = D_e", ok, "");
            let case = classify_duality(&pairs[0], &codes).map(|r| r.case);
            rec.check("Z7 q=2: mu_-1 swaps e and f", case == Ok(DualityCase::Swapped), format!("{case:?}"));
        }
    }
    let z33 = abelian(&[3, 3]);
    let swap = builtin_mu_swap(&z33, 2).expect("3 is an odd prime");
    if let Some(pairs) = rec.result("Z3xZ3 q=2 swap", construct_pairs(&swap, &f, &z33, Mode::EnumerateAll)) {
        for (i, pair) in pairs.iter().enumerate() {
            if let Some(codes) = rec.result("Z3xZ3 q=2 swap", duadic_codes(pair)) {
                let ok = dual(&codes.c_e).ok().as_ref() == Some(&codes.d_f);
                rec.check(format!("Z3xZ3 q=2 swap pair {i}: dual(C_e) = D_f"), ok, "");
                let case = classify_duality(pair, &codes).map(|r| r.case);
                rec.check(
                    format!("Z3xZ3 q=2 swap pair {i}: mu_-1 fixes e and f"),
                    case == Ok(DualityCase::Fixed),
                    format!("{case:?}"),
                );
            }
        }
    }
    let results = exec.map_collect(&builtin_matrix(), |inst| {
        let mut rec = Recorder::new("duality");
        if let Ok(pairs) = construct_pairs(&inst.mu, &inst.field, &inst.group, Mode::Canonical) {
            let report = duadic_codes(&pairs[0]).and_then(|c| classify_duality(&pairs[0], &c));
            if let Some(r) = rec.result(&inst.label, report) {
                rec.check(&inst.label, r.verified, format!("{:?}", r.case));
            }
        }
        rec.checks
    });
    rec.checks.extend(results.into_iter().flatten());
    rec.checks
}

fn bounds(exec: Exec) -> Vec<Check> {
    let mut cells: Vec<Instance> = existence_cells()
        .into_iter()
        .map(|(n, q)| {
            let g = abelian(&[n]);
            instance(&g, q, builtin_mu_minus1(&g))
        })
        .collect();
    cells.extend(builtin_matrix().into_iter().filter(|i| !i.mu.is_mu_minus1() || !i.group.abelian_shape().is_some_and(|s| s.len() == 1)));
    let results = exec.map_collect(&cells, |inst| {
        let mut rec = Recorder::new("bounds");
        let Ok(pairs) = construct_pairs(&inst.mu, &inst.field, &inst.group, Mode::Canonical) else {
            return rec.checks;
        };
        let n = inst.group.order();
        let Some(codes) = rec.result(&inst.label, duadic_codes(&pairs[0])) else {
            return rec.checks;
        };
        match odd_like_min_weight(&codes, Side::E, DEFAULT_ENUM_CAP) {
            Ok(m) => {
                let d = m.weight;
                rec.check(format!("{}: d^2 >= n", inst.label), BoundKind::Square.holds(d, n), format!("d = {d}"));
                if inst.mu.is_mu_minus1() {
                    rec.check(
                        format!("{}: d^2-d+1 >= n", inst.label),
                        BoundKind::SquareShift.holds(d, n),
                        format!("d = {d}"),
                    );
                }
                let bound = odd_like_bound(&pairs[0]);
                rec.check(format!("{}: reported bound", inst.label), d >= bound.d_min, format!("d = {d}, bound {}", bound.d_min));
            }
            Err(Error::CapExceeded { .. }) => {}
            Err(e) => rec.check(&inst.label, false, e.to_string()),
        }
        rec.checks
    });
    let mut checks: Vec<Check> = results.into_iter().flatten().collect();
    let mut rec = Recorder::new("bounds");
    let z7 = abelian(&[7]);
    let f = gf(2);
    let d = construct_pairs(&builtin_mu_minus1(&z7), &f, &z7, Mode::Canonical)
        .and_then(|p| duadic_codes(&p[0]))
        .and_then(|c| odd_like_min_weight(&c, Side::E, DEFAULT_ENUM_CAP));
    if let Some(m) = rec.result("Z7 q=2", d) {
        rec.check("Z7 q=2: d = 3 meets d^2-d+1 = 7", m.weight == 3, format!("d = {}", m.weight));
    }
    checks.extend(rec.checks);
    checks
}

/// `a^x b^y` terms in `Z3 x Z3`.
fn z33_element(f: &FiniteField, g: &Group, terms: &[(u32, u32)]) -> AlgebraElement {
    let ids: Vec<u32> = terms
        .iter()
        .map(|&(x, y)| g.from_exponents(&[x, y]).expect("exponents in range"))
        .collect();
    AlgebraElement::from_support(f, g, &ids)
}

/// The pair `e1 = a + a^2 + ab + a^2b^2`, `f1 = b + b^2 + ab^2 + a^2b` in
/// `F_2[Z3 x Z3]` under the swap.
pub fn z33_example_pair() -> duadic::Result<DuadicPair> {
    let f = gf(2);
    let g = abelian(&[3, 3]);
    let e1 = z33_element(&f, &g, &[(1, 0), (2, 0), (1, 1), (2, 2)]);
    let f1 = z33_element(&f, &g, &[(0, 1), (0, 2), (1, 2), (2, 1)]);
    DuadicPair::new(&f, &g, e1, f1, &builtin_mu_swap(&g, 2)?)
}

fn order_81_example() -> Vec<Check> {
    let mut rec = Recorder::new("paper-81");
    let Some(p) = rec.result("Z3xZ3 pair", z33_example_pair()) else {
        return rec.checks;
    };
    rec.check("e1, f1 form a pair under the swap", true, "");
    rec.check(
        "e1, f1 even-like idempotents",
        p.e().is_even_like() && p.f().is_even_like() && p.e().is_idempotent() && p.f().is_idempotent(),
        "",
    );
    let minus1 = builtin_mu_minus1(p.group());
    let fixed = apply_antiauto(&minus1, p.e()).ok().as_ref() == Some(p.e())
        && apply_antiauto(&minus1, p.f()).ok().as_ref() == Some(p.f());
    rec.check("e1, f1 fixed by mu_-1", fixed, "");
    let canonical = construct_pairs(p.mu(), p.field(), p.group(), Mode::EnumerateAll);
    if let Some(all) = rec.result("enumerated pairs", canonical) {
        rec.check(
            "canonical pair is (e1, f1)",
            all[0].e() == p.e() && all[0].f() == p.f(),
            format!("{} pairs", all.len()),
        );
    }
    let Some(prod) = rec.result("product pair", product_duadic(&p, &p)) else {
        return rec.checks;
    };
    rec.check("product has order 81", prod.n() == 81, "");
    rec.check("product e idempotent", prod.e().is_idempotent() && prod.f().is_idempotent(), "");
    let e1 = p.e().embed_left(prod.group());
    let e2 = p.e().embed_right(prod.group());
    let f1 = p.f().embed_left(prod.group());
    if let (Ok(e1), Ok(e2), Ok(f1)) = (e1, e2, f1) {
        let formula = &(&(&e1 + &e2) - &(&e1 * &e2)) - &(&f1 * &e2);
        rec.check("e = e1+e2-e1e2-f1e2", &formula == prod.e(), "");
        let Some(qd) = rec.result("quantum code", quantum_from_pair(prod.clone(), DEFAULT_ENUM_CAP, Exec::default())) else {
            return rec.checks;
        };
        let (c_e, d_e) = (qd.codes.c_e.dimension(), qd.codes.d_e.dimension());
        rec.check("dim C_e = 40, dim D_e = 41", (c_e, d_e) == (40, 41), format!("{c_e}/{d_e}"));
        rec.check(
            "e1 in C_e with weight 4",
            qd.codes.c_e.contains(e1.coeffs()) && e1.weight() == 4,
            format!("weight {}", e1.weight()),
        );
        let bound = odd_like_bound(&prod);
        rec.check(
            "square bound applies with d >= 9",
            bound.kind == BoundKind::Square && bound.d_min == 9,
            format!("{bound:?}"),
        );
        rec.check(
            "parameters [[81,1,>=9]]_2",
            qd.css.parameters() == "[[81,1,>=9]]_2"
                && qd.css.distance() == Some(Distance::LowerBound { d: 9, kind: BoundKind::Square }),
            qd.css.parameters(),
        );
    } else {
        rec.check("embedding", false, "factor embedding failed");
    }
    rec.checks
}

fn css() -> Vec<Check> {
    let mut rec = Recorder::new("css");
    for (n, expected) in [(7u32, "[[7,1,3]]_2"), (23, "[[23,1,7]]_2")] {
        let g = abelian(&[n]);
        let f = gf(2);
        let label = format!("Z{n} q=2");
        let built = construct_pairs(&builtin_mu_minus1(&g), &f, &g, Mode::Canonical)
            .and_then(|mut p| quantum_from_pair(p.remove(0), DEFAULT_ENUM_CAP, Exec::default()));
        if let Some(qd) = rec.result(&label, built) {
            let params = qd.css.parameters();
            rec.check(format!("{label}: {expected}"), params == expected, params);
            let d = qd.css.distance().map_or(0, Distance::value);
            rec.check(format!("{label}: d^2-d+1 >= n"), BoundKind::SquareShift.holds(d, n as usize), "");
            let orthogonal = qd.css.x_stabilizers().mul(&qd.css.z_stabilizers().transpose()).is_zero();
            rec.check(format!("{label}: stabilizers commute"), orthogonal, "");
        }
    }
    rec.checks
}

/// Invariant-factor shapes (ascending divisibility) of the abelian groups of order `n`.
pub fn abelian_shapes(n: u32) -> Vec<Vec<u32>> {
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=k.min(max)).rev() {
            for mut rest in partitions(k - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        if k > 0 {
            primes.push((p, k));
        }
        p += 1;
    }
    let mut shapes: Vec<Vec<u32>> = vec![Vec::new()];
    for (p, k) in primes {
        let mut next = Vec::new();
        for shape in &shapes {
            for part in partitions(k, k) {
                // part is descending; combine position-wise from the largest factor.
                let len = shape.len().max(part.len());
                let pad = |v: &[u32], len: usize| {
                    let mut out = vec![1u32; len - v.len()];
                    out.extend_from_slice(v);
                    out
                };
                let a = pad(shape, len);
                let mut b: Vec<u32> = part.iter().rev().map(|&e| p.pow(e)).collect();
                b = pad(&b, len);
                next.push(a.iter().zip(&b).map(|(x, y)| x * y).collect());
            }
        }
        shapes = next;
    }
    shapes.retain(|s| !s.is_empty());
    shapes
}

fn oracle(exec: Exec) -> Vec<Check> {
    let mut cells = Vec::new();
    for n in 2..=81u32 {
        for shape in abelian_shapes(n) {
            for q in FIELD_ORDERS.into_iter().filter(|&q| gcd(n as u64, q) == 1) {
                cells.push((shape.clone(), q));
            }
        }
    }
    let results = exec.map_collect(&cells, |(shape, q)| {
        let mut rec = Recorder::new("oracle");
        let label = format!("{shape:?} q={q}");
        let (f, g) = (gf(*q), abelian(shape));
        let split = rec.result(&label, split_primitive_central_idempotents(&f, &g));
        let chars = rec.result(&label, abelian_character_idempotents(&f, &g));
        if let (Some(a), Some(b)) = (split, chars) {
            rec.check(&label, a == b, format!("{} idempotents", a.len()));
        }
        rec.checks
    });
    results.into_iter().flatten().collect()
}

/// Runs one suite, or all of them for `"all"`.
pub fn run_suite(name: &str, exec: Exec) -> Result<Vec<Check>> {
    Ok(match name {
        "key-prop" => key_prop(exec),
        "existence" => existence_suite(exec),
        "structure" => structure(exec),
        "duality" => duality(exec),
        "bounds" => bounds(exec),
        "paper-81" => order_81_example(),
        "css" => css(),
        "oracle" => oracle(exec),
        "all" => {
            let mut all = Vec::new();
            for s in SUITES {
                all.extend(run_suite(s, exec)?);
            }
            all
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown suite {other:?}; expected one of {}, all",
                SUITES.join(", ")
            )))
        }
    })
}

/// Failures listed individually, then a one-line summary.
pub fn render_checks(checks: &[Check], verbose: bool) -> String {
    let mut out = String::new();
    for c in checks.iter().filter(|c| verbose || !c.passed) {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = write!(out, "{status} {}: {}", c.suite, c.label);
        if !c.detail.is_empty() {
            let _ = write!(out, " ({})", c.detail);
        }
        out.push('\n');
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(out, "{} checks, {} failed", checks.len(), failed);
    out
}

/// `Err` with exit code 3 when any check failed.
pub fn outcome(checks: &[Check]) -> Result<()> {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.label.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!("{} failed: {}", failed.len(), failed.join("; "))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_of_small_orders() {
        assert_eq!(abelian_shapes(1), Vec::<Vec<u32>>::new());
        assert_eq!(abelian_shapes(9), vec![vec![9], vec![3, 3]]);
        assert_eq!(abelian_shapes(12), vec![vec![12], vec![2, 6]]);
        assert_eq!(abelian_shapes(81).len(), 5);
        for n in 2..=81 {
            for s in abelian_shapes(n) {
                assert_eq!(s.iter().product::<u32>(), n);
                assert!(s.windows(2).all(|w| w[1] % w[0] == 0), "{s:?}");
            }
        }
    }

    #[test]
    fn unknown_suite_is_a_usage_error() {
        assert_eq!(run_suite("nope", Exec::Sequential).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn failures_map_to_exit_three() {
        let checks = vec![Check {
            suite: "x".into(),
            label: "y".into(),
            passed: false,
            detail: String::new(),
        }];
        assert_eq!(outcome(&checks).unwrap_err().exit_code(), 3);
        assert!(render_checks(&checks, false).contains("FAIL x: y"));
    }

    #[test]
    fn small_suites_pass() {
        for s in ["duality", "paper-81", "key-prop"] {
            let checks = run_suite(s, Exec::default()).unwrap();
            assert!(outcome(&checks).is_ok(), "{}", render_checks(&checks, false));
        }
    }
}
