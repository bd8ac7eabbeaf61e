//! Sequential vs rayon execution of the data-parallel entry points.
//!
//! Built without the `parallel` feature, both arms run sequentially.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use unavoid_core::enumerate::{self, Probability};
use unavoid_core::harness::{self, EnumerationScope, WitnessConfig};
use unavoid_core::{detect, params, Exec, FamilySpec, TheoremId};

const ARMS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn profiles(c: &mut Criterion) {
    let g = enumerate::random_graph(120, Probability::new(1, 2).unwrap(), 11);
    let mut group = c.benchmark_group("all_profiles");
    for (name, exec) in ARMS {
        group.bench_function(BenchmarkId::new(name, 120), |b| b.iter(|| params::all_profiles_with(black_box(&g), exec)));
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (name, exec) in ARMS {
        group.bench_function(BenchmarkId::new(name, 7), |b| {
            b.iter(|| enumerate::enumerate_graphs_with(black_box(7), false, exec).unwrap())
        });
    }
    group.finish();
}

fn freeness(c: &mut Criterion) {
    let spec = FamilySpec::new(TheoremId::B1AlphaL, 4).unwrap();
    let g = enumerate::random_graph(40, Probability::new(1, 5).unwrap(), 3);
    let mut group = c.benchmark_group("is_hfree");
    for (name, exec) in ARMS {
        group.bench_function(BenchmarkId::new(name, "B1_alphaL(4)"), |b| {
            b.iter(|| detect::is_hfree_with(black_box(&g), &spec, exec))
        });
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let scope = EnumerationScope::builtin(6, false);
    let cfg = WitnessConfig { trials: 20, max_order: 20, edge_prob: Probability::new(3, 10).unwrap(), seed: 1 };
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for (name, exec) in ARMS {
        group.bench_function(BenchmarkId::new(name, "local_chain(6)"), |b| {
            b.iter(|| harness::check_local_chain(&scope, exec).unwrap())
        });
        group.bench_function(BenchmarkId::new(name, "witnesses(20)"), |b| {
            b.iter(|| harness::validate_witnesses(cfg, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, profiles, enumeration, freeness, suites);
criterion_main!(benches);
