//! Criterion suite: the three dynamic programs across instance sizes, the
//! two P2 variants head to head, and the brute-force oracle in its
//! sequential and (feature-gated) parallel forms.
//!
//! Run with `cargo bench -p rejsched`; add `--no-default-features` to see
//! the sequential oracle only.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use rejsched::generator::{generate, GenParams};
use rejsched::{
    solve_oracle, solve_oracle_sequential, solve_p1, solve_p2_exact, solve_p2_literal, solve_p3,
    Instance, ProblemKind,
};

fn instance(kind: ProblemKind, n: usize, seed: u64) -> Instance {
    generate(&GenParams::new(kind, n, seed)).unwrap()
}

fn bench_dp1(c: &mut Criterion) {
    let mut group = c.benchmark_group("dp1");
    group.sample_size(20);
    for n in [250, 500, 1000] {
        let inst = instance(ProblemKind::P1, n, 11);
        group.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, inst| {
            b.iter(|| solve_p1(black_box(inst), inst.u).unwrap())
        });
    }
    group.finish();
}

fn bench_dp2_variants(c: &mut Criterion) {
    let mut group = c.benchmark_group("dp2");
    group.sample_size(20);
    for n in [100, 200] {
        let inst = instance(ProblemKind::P2, n, 22);
        group.bench_with_input(BenchmarkId::new("literal", n), &inst, |b, inst| {
            b.iter(|| solve_p2_literal(black_box(inst), inst.u).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("exact", n), &inst, |b, inst| {
            b.iter(|| solve_p2_exact(black_box(inst), inst.u).unwrap())
        });
    }
    group.finish();
}

fn bench_dp3(c: &mut Criterion) {
    let mut group = c.benchmark_group("dp3");
    group.sample_size(20);
    for n in [10, 20, 40] {
        let inst = instance(ProblemKind::P3, n, 33);
        group.bench_with_input(BenchmarkId::from_parameter(n), &inst, |b, inst| {
            b.iter(|| solve_p3(black_box(inst), inst.u).unwrap())
        });
    }
    group.finish();
}

/// Parallel dispatch against the always-sequential reference on the same
/// instances. With `--no-default-features` both sides run sequentially.
fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for n in [12, 16, 18] {
        let inst = instance(ProblemKind::P2, n, 44);
        group.bench_with_input(BenchmarkId::new("dispatch", n), &inst, |b, inst| {
            b.iter(|| solve_oracle(black_box(inst), inst.u).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &inst, |b, inst| {
            b.iter(|| solve_oracle_sequential(black_box(inst), inst.u).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_dp1, bench_dp2_variants, bench_dp3, bench_oracle);
criterion_main!(benches);
