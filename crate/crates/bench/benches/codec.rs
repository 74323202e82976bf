use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use hypertree_bench::{bipartite_code, bipartite_tree, hypertree, hypertree_code};
use hypertree_core::{decode, decode_bipartite, encode, encode_bipartite, validate_hypertree};

const SIZES: [usize; 3] = [100, 1_000, 10_000];

fn hypertree_codec(c: &mut Criterion) {
    let mut group = c.benchmark_group("hypertree");
    for n in SIZES {
        let t = hypertree(n, 1);
        let code = hypertree_code(n, 1);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("encode", n), &t, |b, t| {
            b.iter(|| encode(black_box(t)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("decode", n), &code, |b, code| {
            b.iter(|| decode(black_box(code)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("validate", n), &t, |b, t| {
            b.iter(|| validate_hypertree(black_box(t.graph().clone())).unwrap())
        });
    }
    group.finish();
}

fn bipartite_codec(c: &mut Criterion) {
    let mut group = c.benchmark_group("bipartite");
    for n in SIZES {
        let (a, b) = (n / 2, n - n / 2);
        let t = bipartite_tree(a, b, 2);
        let code = bipartite_code(a, b, 2);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("encode", n), &t, |bench, t| {
            bench.iter(|| encode_bipartite(black_box(t)))
        });
        group.bench_with_input(BenchmarkId::new("decode", n), &code, |bench, code| {
            bench.iter(|| decode_bipartite(black_box(code)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, hypertree_codec, bipartite_codec);
criterion_main!(benches);
