//! Parallel versus sequential enumeration timings.  Build with the default
//! features to compare the rayon paths against the plain ones; with
//! `--no-default-features` both sides are sequential.

use criterion::{criterion_group, criterion_main, Criterion};
use facdual::trees::{
    enumerate_minimal_factorizations, enumerate_minimal_factorizations_seq,
    enumerate_selfdual_etrees, enumerate_selfdual_etrees_seq, standard_cycle,
};
use facdual::verify::{run_suite, VerifyOptions};
use std::hint::black_box;

fn bench_minimal_factorizations(c: &mut Criterion) {
    let zeta = standard_cycle(6);
    let mut group = c.benchmark_group("minimal-factorizations-n6");
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_minimal_factorizations(black_box(&zeta)).unwrap().len())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_minimal_factorizations_seq(black_box(&zeta)).unwrap().len())
    });
    group.finish();
}

fn bench_selfdual(c: &mut Criterion) {
    let mut group = c.benchmark_group("selfdual-etrees-n6");
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_selfdual_etrees(black_box(6), false).unwrap().by_filter)
    });
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_selfdual_etrees_seq(black_box(6), false).unwrap().by_filter)
    });
    group.finish();
}

fn bench_involution_suite(c: &mut Criterion) {
    let opts = VerifyOptions { cases: 800, ..Default::default() };
    let mut group = c.benchmark_group("involution-suite-800");
    group.sample_size(10);
    group.bench_function("batch", |b| {
        b.iter(|| {
            let report = run_suite("involution", black_box(&opts)).unwrap();
            assert!(report.passed());
            report.cases
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_minimal_factorizations,
    bench_selfdual,
    bench_involution_suite
);
criterion_main!(benches);
