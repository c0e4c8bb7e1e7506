use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wsg_core::census::{brute_force_enumerate, enumerate_containing};
use wsg_core::{classify, sharp_semigroup, ws_of_q_full_genus, NumericalSemigroup, TwoGenParams};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    for &(a, b) in &[(7u64, 50u64), (20, 101), (30, 181)] {
        let p = TwoGenParams::new(a, b).unwrap();
        group.bench_with_input(
            BenchmarkId::new("generators", format!("{a},{b}")),
            &(a, b),
            |bench, &(a, b)| {
                bench.iter(|| NumericalSemigroup::from_generators(black_box(&[a, b])).unwrap())
            },
        );
        group.bench_with_input(
            BenchmarkId::new("sharp", format!("{a},{b}")),
            &p,
            |bench, p| bench.iter(|| sharp_semigroup(black_box(p)).unwrap()),
        );
        group.bench_with_input(
            BenchmarkId::new("ws_q", format!("{a},{b}")),
            &p,
            |bench, p| bench.iter(|| ws_of_q_full_genus(black_box(p)).unwrap()),
        );
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let h = NumericalSemigroup::from_generators(&[20, 101]).unwrap();
    let s = sharp_semigroup(&TwoGenParams::new(20, 101).unwrap()).unwrap();
    c.bench_function("classify <20;101>", |bench| {
        bench.iter(|| classify(black_box(&h)).unwrap())
    });
    c.bench_function("classify sharp <20;101>", |bench| {
        bench.iter(|| classify(black_box(&s)).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    let p = TwoGenParams::new(5, 13).unwrap();
    for g in [20u64, 18] {
        group.bench_with_input(BenchmarkId::new("pruned", g), &g, |bench, &g| {
            bench.iter(|| enumerate_containing(&p, black_box(g), false).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("brute_force", g), &g, |bench, &g| {
            bench.iter(|| brute_force_enumerate(&p, black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, construction, classification, enumeration);
criterion_main!(benches);
