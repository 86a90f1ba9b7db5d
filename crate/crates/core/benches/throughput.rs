//! Sequential vs. parallel execution on the exhaustive workloads.

use std::hint::black_box;

use bary::derived::barycentric_subdivision_with;
use bary::verify::{enumerate_complexes_with, verify_equivalences_with, verify_subdivision_rigidity_with};
use bary::{Execution, SimplicialComplex};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_up_to_iso");
    for n in [4, 5] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| enumerate_complexes_with(black_box(n), true, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn rigidity(c: &mut Criterion) {
    let mut group = c.benchmark_group("subdivision_rigidity");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| verify_subdivision_rigidity_with(black_box(5), exec).unwrap())
        });
    }
    group.finish();
}

fn equivalences(c: &mut Criterion) {
    let mut group = c.benchmark_group("equivalences");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| verify_equivalences_with(black_box(4), exec).unwrap())
        });
    }
    group.finish();
}

fn subdivision(c: &mut Criterion) {
    let mut group = c.benchmark_group("subdivide_simplex_boundary");
    for n in [5, 6] {
        let boundary = SimplicialComplex::simplex_boundary(n).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &boundary, |b, c| {
                b.iter(|| barycentric_subdivision_with(black_box(c), exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration, rigidity, equivalences, subdivision);
criterion_main!(benches);
