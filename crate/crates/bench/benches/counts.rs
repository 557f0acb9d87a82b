//! Benchmarks for the counting, enumeration, and polynomial layers.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use colorforest::{
    build_pk, census, count_forests, enumerate_triangulations, verify_pk_identity, BruteCounter,
    PkIdentity,
};
use colorforest_bench::{headline_instance, medium_instance};

fn bench_closed_form(c: &mut Criterion) {
    let (lambda, roots) = headline_instance();
    c.bench_function("count_forests/headline", |b| {
        b.iter(|| count_forests(black_box(&lambda), black_box(&roots)).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let (lambda, roots) = medium_instance();
    c.bench_function("brute_count/11-vertex", |b| {
        b.iter(|| {
            BruteCounter::new()
                .count_forests(black_box(&lambda), black_box(&roots))
                .unwrap()
        })
    });
}

fn bench_keypoly(c: &mut Criterion) {
    c.bench_function("build_pk/k4", |b| b.iter(|| build_pk(black_box(4))));
    c.bench_function("pk_shift_identity/k3", |b| {
        b.iter(|| verify_pk_identity(black_box(3), PkIdentity::Shift))
    });
}

fn bench_triangulations(c: &mut Criterion) {
    c.bench_function("enumerate_triangulations/n10", |b| {
        b.iter(|| enumerate_triangulations(black_box(10)).len())
    });
    c.bench_function("census_formula/n16", |b| {
        b.iter(|| census(black_box(16), false).unwrap())
    });
    c.bench_function("census_brute/n10", |b| {
        b.iter(|| census(black_box(10), true).unwrap())
    });
}

criterion_group!(
    benches,
    bench_closed_form,
    bench_oracle,
    bench_keypoly,
    bench_triangulations
);
criterion_main!(benches);
