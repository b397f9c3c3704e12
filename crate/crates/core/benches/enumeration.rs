use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use duadic::codes::{min_weight_exhaustive_with, odd_like_min_weight_with, weight_distribution_with, DEFAULT_ENUM_CAP};
use duadic::duadic::{construct_pairs, duadic_codes, DuadicCodes, Mode, Side};
use duadic::exec::Exec;
use duadic::gf::FiniteField;
use duadic::groups::{builtin_mu_minus1, Group};

fn cyclic_codes(n: u32, q: u64) -> DuadicCodes {
    let field = FiniteField::from_order(q).unwrap();
    let group = Group::abelian(&[n]).unwrap();
    let pair = construct_pairs(&builtin_mu_minus1(&group), &field, &group, Mode::Canonical)
        .unwrap()
        .remove(0);
    duadic_codes(&pair).unwrap()
}

fn strategies() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn bench_min_weight(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_weight");
    // [31,16] over GF(2): 2^16 words; [47,24] over GF(2): 2^24 words.
    for (n, q) in [(31, 2), (47, 2), (13, 3)] {
        let codes = cyclic_codes(n, q);
        for (name, exec) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, format!("n{n}_q{q}")), &codes, |b, codes| {
                b.iter(|| min_weight_exhaustive_with(&codes.d_e, DEFAULT_ENUM_CAP, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_odd_like(c: &mut Criterion) {
    let mut group = c.benchmark_group("odd_like");
    let codes = cyclic_codes(47, 2);
    for (name, exec) in strategies() {
        group.bench_function(name, |b| {
            b.iter(|| odd_like_min_weight_with(&codes, Side::E, DEFAULT_ENUM_CAP, exec).unwrap())
        });
    }
    group.finish();
}

fn bench_distribution(c: &mut Criterion) {
    let mut group = c.benchmark_group("weight_distribution");
    let codes = cyclic_codes(31, 2);
    for (name, exec) in strategies() {
        group.bench_function(name, |b| {
            b.iter(|| weight_distribution_with(&codes.c_e, DEFAULT_ENUM_CAP, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_min_weight, bench_odd_like, bench_distribution
}
criterion_main!(benches);
