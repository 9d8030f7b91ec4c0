use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use geosep_cli::generate::{generate, GenerateParams, Generator};
use geosep_cli::{Items, Kind};
use geosep_core::solvers::Decomposition;

fn decomposition(kind: Kind, n: usize) -> Decomposition {
    let side = (n as f64).sqrt();
    let inst = generate(&GenerateParams::new(kind, n, n as u64, Generator::Uniform { width: side, height: side })).unwrap();
    match &inst.items {
        Items::Rects(r) => Decomposition::for_rects(r),
        Items::Points(p) => Decomposition::for_points(p),
    }
}

fn top_level_separator(c: &mut Criterion) {
    let mut group = c.benchmark_group("separate");
    for (name, kind) in [("rects", Kind::Rects), ("points", Kind::Points)] {
        for n in [250, 1000, 2000] {
            let dec = decomposition(kind, n);
            let all: Vec<usize> = (0..n).collect();
            group.bench_with_input(BenchmarkId::new(name, n), &all, |b, all| b.iter(|| dec.separate(all).unwrap()));
        }
    }
    group.finish();
}

criterion_group!(benches, top_level_separator);
criterion_main!(benches);
