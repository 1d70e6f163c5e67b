use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use edgeideal_bench::family;
use edgeideal_core::chordal::cochordal_cover_number;
use edgeideal_core::enumerate::{connected_graphs, forests};
use edgeideal_core::even_connection::{gprime, gprime_algebraic, parse_edge_list};

fn cochord_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("cochordal_cover_number");
    for expr in ["C9", "C12", "W(C6)", "co(C8)"] {
        let g = family(expr);
        group.bench_function(expr, |b| b.iter(|| cochordal_cover_number(&g).unwrap()));
    }
    group.finish();
}

fn gprime_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("gprime");
    group.sample_size(20);
    for (expr, edges) in [("C6", "x2 x3, x4 x5"), ("C10", "x1 x2, x5 x6, x8 x9"), ("W(C5)", "x1 x2, x1 x2")] {
        let g = family(expr);
        let multiset = parse_edge_list(&g, edges).unwrap();
        group.bench_function(BenchmarkId::new("walks", expr), |b| b.iter(|| gprime(&g, &multiset).unwrap()));
        group.bench_function(BenchmarkId::new("algebraic", expr), |b| {
            b.iter(|| gprime_algebraic(&g, &multiset).unwrap())
        });
    }
    group.finish();
}

fn enumeration_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("connected:6", |b| b.iter(|| connected_graphs(6).unwrap().len()));
    group.bench_function("forests:7", |b| b.iter(|| forests(7).unwrap().len()));
    group.finish();
}

criterion_group!(benches, cochord_bench, gprime_bench, enumeration_bench);
criterion_main!(benches);
