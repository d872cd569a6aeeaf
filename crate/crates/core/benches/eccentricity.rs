use std::hint::black_box;

use alphametric::approx::{approx_eccentricities, PairMode};
use alphametric::center::{find_central_alpha1, find_central_alpha1_delta};
use alphametric::classify::alpha_index_with;
use alphametric::generate::gen_chordal;
use alphametric::oracle::exact_eccentricities_with;
use alphametric::par::Execution;
use alphametric::DistanceMatrix;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_eccentricities");
    group.sample_size(10);
    for n in [500, 2000] {
        let g = gen_chordal(n, 1, 4);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| exact_eccentricities_with(black_box(g), exec))
            });
        }
    }
    group.finish();
}

fn classifier(c: &mut Criterion) {
    let mut group = c.benchmark_group("alpha_index");
    group.sample_size(10);
    for n in [100, 200] {
        let g = gen_chordal(n, 2, 4);
        let dm = DistanceMatrix::new(&g);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| alpha_index_with(black_box(g), &dm, exec))
            });
        }
    }
    group.finish();
}

fn approximate_vs_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("approx_vs_exact");
    group.sample_size(10);
    for n in [1000, 4000] {
        let g = gen_chordal(n, 3, 4);
        group.bench_with_input(BenchmarkId::new("exact_parallel", n), &g, |b, g| {
            b.iter(|| exact_eccentricities_with(black_box(g), Execution::Parallel))
        });
        group.bench_with_input(BenchmarkId::new("lower_bounds_mdp", n), &g, |b, g| {
            b.iter(|| approx_eccentricities(black_box(g), PairMode::Mdp))
        });
        group.bench_with_input(BenchmarkId::new("central_alpha1", n), &g, |b, g| {
            b.iter(|| find_central_alpha1(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("central_alpha1_delta", n), &g, |b, g| {
            b.iter(|| find_central_alpha1_delta(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(benches, exact, classifier, approximate_vs_exact);
criterion_main!(benches);
