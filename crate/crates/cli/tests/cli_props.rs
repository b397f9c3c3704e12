use std::process::Command;

use duadic_cli::commands::{parse_list, reports_json};
use duadic_cli::report::CodeReport;
use duadic_cli::spec::{FactorSpec, GroupSpec, MuSpec};
use duadic_cli::{cmd_construct, cmd_scan, ConstructArgs, Family, Options, ScanArgs};
use proptest::prelude::*;

fn construct(group: &str, q: u64, mu: &str, product: bool) -> CodeReport {
    let args = ConstructArgs {
        group: group.parse().unwrap(),
        q,
        mu: mu.parse().unwrap(),
        product,
        enumerate_all: true,
        emit: None,
        options: Options::default(),
    };
    cmd_construct(&args).unwrap()
}

fn scan(ns: &str, qs: &str, family: Family, mu: &str) -> Vec<CodeReport> {
    cmd_scan(&ScanArgs {
        ns: parse_list(ns).unwrap(),
        qs: parse_list(qs).unwrap(),
        family,
        mu: mu.parse().unwrap(),
        options: Options {
            distances: false,
            ..Options::default()
        },
    })
    .unwrap()
}

fn duadic(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_duadic")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn group_specs_parse(orders in prop::collection::vec(2u32..50, 1..4), second in prop::option::of(prop::collection::vec(2u32..50, 1..3))) {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join("x");
        let mut text = join(&orders);
        let mut expected = vec![FactorSpec::Abelian(orders.clone())];
        if let Some(s) = &second {
            text = format!("{text},{}", join(s));
            expected.push(FactorSpec::Abelian(s.clone()));
        }
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap().factors, expected);
    }

    #[test]
    fn ranges_are_inclusive(a in 0u64..60, len in 0u64..20) {
        let b = a + len;
        let list = parse_list(&format!("{a}..{b}")).unwrap();
        prop_assert_eq!(list.len() as u64, len + 1);
        let reversed = parse_list(&format!("{}..{}", b, a)).unwrap();
        prop_assert!(reversed.is_empty() || len == 0);
    }

    #[test]
    fn scan_reports_round_trip(n in (1u64..23).prop_map(|k| 2 * k + 1), q in prop::sample::select(vec![2u64, 3, 4, 5])) {
        for report in scan(&n.to_string(), &q.to_string(), Family::Cyclic, "mu-1") {
            let back: CodeReport = serde_json::from_str(&report.to_json()).unwrap();
            prop_assert_eq!(back, report);
        }
    }
}

#[test]
fn construct_reports_round_trip() {
    for (g, q, mu, product) in [("7", 2, "mu-1", false), ("3x3", 2, "swap", false), ("3x3,3x3", 2, "swap", true), ("23", 2, "mu-1", false)] {
        let report = construct(g, q, mu, product);
        let back: CodeReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }
}

#[test]
fn swap_report_lists_the_known_idempotents() {
    let r = construct("3x3", 2, "swap", false);
    let idem = r.idempotents.unwrap();
    assert_eq!(idem.e, ["a^1*b^0: 1", "a^2*b^0: 1", "a^1*b^1: 1", "a^2*b^2: 1"]);
    assert_eq!(idem.f, ["a^0*b^1: 1", "a^2*b^1: 1", "a^0*b^2: 1", "a^1*b^2: 1"]);
    assert_eq!(idem.alternatives.len(), 1);
}

#[test]
fn product_report() {
    let r = construct("3x3,3x3", 2, "swap*swap", true);
    let qd = r.quantum.unwrap();
    assert_eq!(qd.parameters, "[[81,1,>=9]]_2");
    let dims = r.dimensions.unwrap();
    assert_eq!((dims.c_e, dims.d_e), (40, 41));
    let dist = r.distances.unwrap();
    assert_eq!(dist.odd_like.value(), 9);
    assert_eq!(dist.even_like.map(|d| d.value()), Some(4));
}

#[test]
fn scans_are_deterministic_and_ordered() {
    let a = reports_json(&scan("3..25", "2,3,4", Family::Cyclic, "mu-1"));
    let b = reports_json(&scan("3..25", "2,3,4", Family::Cyclic, "mu-1"));
    assert_eq!(a, b);
    let rows = scan("3..25", "2,3,4", Family::Cyclic, "mu-1");
    let keys: Vec<(usize, u64)> = rows.iter().map(|r| (r.n, r.q)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn cyclic_scan_over_two() {
    let ord_is_odd = |n: u64| {
        let (mut x, mut k) = (2 % n, 1);
        while x != 1 {
            x = x * 2 % n;
            k += 1;
        }
        k % 2 == 1
    };
    let rows = scan("3..45", "2", Family::Cyclic, "mu-1");
    let splitting: Vec<usize> = rows.iter().filter(|r| r.existence.splits).map(|r| r.n).collect();
    let expected: Vec<usize> = (3..=45u64).step_by(2).filter(|&n| ord_is_odd(n)).map(|n| n as usize).collect();
    assert_eq!(splitting, expected);
    assert!(splitting.contains(&7) && splitting.contains(&23));
    assert!(!splitting.contains(&9) && !splitting.contains(&17));
}

#[test]
fn prime_square_scan_with_swap() {
    let rows = scan("3,5", "2", Family::PrimeSquare, "swap");
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.existence.splits && r.existence.agreement == Some(true)));
}

#[test]
fn empty_range_gives_empty_table() {
    assert!(scan("9..3", "2", Family::Cyclic, "mu-1").is_empty());
    let (code, out, _) = duadic(&["scan", "-n", "9..3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "[]");
}

#[test]
fn exit_codes() {
    let (code, _, err) = duadic(&["construct", "--group", "9", "--q", "2", "--mu", "mu-1"]);
    assert_eq!(code, 2);
    assert!(err.contains("ord_9(2)=6 even"), "{err}");
    assert_eq!(duadic(&["construct", "--group", "7", "--q", "2"]).0, 0);
    assert_eq!(duadic(&["construct", "--group", "7", "--q", "6"]).0, 1);
    assert_eq!(duadic(&["construct", "--group", "7x", "--q", "2"]).0, 1);
    assert_eq!(duadic(&["verify", "no-such-suite"]).0, 1);
    assert_eq!(duadic(&["frobnicate"]).0, 1);
    assert_eq!(duadic(&["--help"]).0, 0);
    assert_eq!(duadic(&["verify", "paper-81"]).0, 0);
}

#[test]
fn cayley_and_permutation_files() {
    let dir = std::env::temp_dir().join(format!("duadic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let table = dir.join("z7.cayley");
    let rows: Vec<String> = (0..7)
        .map(|a| (0..7).map(|b| ((a + b) % 7).to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    std::fs::write(&table, format!("7\n{}\n", rows.join("\n"))).unwrap();
    let perm = dir.join("inv.perm");
    std::fs::write(&perm, "7 0\n0 6 5 4 3 2 1\n").unwrap();
    let group = format!("@{}", table.display());
    let mu = format!("@{}", perm.display());
    let (code, out, err) = duadic(&["construct", "--group", &group, "--q", "2", "--mu", &mu, "--json"]);
    assert_eq!(code, 0, "{err}");
    let r: CodeReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.quantum.unwrap().parameters, "[[7,1,3]]_2");
    let emit = dir.join("out");
    let (code, _, _) = duadic(&["construct", "--group", "7", "--q", "2", "--emit", emit.to_str().unwrap()]);
    assert_eq!(code, 0);
    let x = std::fs::read_to_string(emit.join("x_stabilizers.txt")).unwrap();
    assert!(x.starts_with("3 7 2\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn mu_specs_parse() {
    assert_eq!("swap".parse::<MuSpec>().unwrap(), MuSpec::Swap);
    assert!("".parse::<MuSpec>().is_err());
}
