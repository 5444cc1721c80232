use std::hint::black_box;

use altpoly::family;
use altpoly::{EngineConfig, PermutationGroup, Verifier};
use criterion::{criterion_group, criterion_main, Criterion};

fn chain(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain");
    for (name, r, k) in [("FL", 9, 0), ("Sh", 6, 2), ("S", 7, 2)] {
        let s = family::build(name, r, k).unwrap();
        group.bench_function(format!("{name}({r},{k})"), |b| {
            b.iter(|| PermutationGroup::new(s.degree(), black_box(s.generators())).order())
        });
    }
    group.finish();
}

fn intersection(c: &mut Criterion) {
    let config = EngineConfig::default();
    let mut group = c.benchmark_group("intersection");
    for (name, r, k) in [("D", 6, 0), ("B", 7, 2)] {
        let s = family::build(name, r, k).unwrap();
        let facet = s.facet().group();
        let vertex = s.vertex_figure().group();
        group.bench_function(format!("{name}({r},{k})"), |b| {
            b.iter(|| facet.intersect(black_box(&vertex), &config).unwrap().order())
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(20);
    for (name, r, k) in [("D", 6, 0), ("S", 7, 2), ("D", 7, 4)] {
        let s = family::build(name, r, k).unwrap();
        group.bench_function(format!("{name}({r},{k})"), |b| {
            b.iter(|| Verifier::default().verify(black_box(&s)).verdict)
        });
    }
    group.finish();
}

criterion_group!(benches, chain, intersection, verify);
criterion_main!(benches);
