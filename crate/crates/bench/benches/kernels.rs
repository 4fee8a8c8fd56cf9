//! Benchmarks for the hot kernels: the counting dynamic program, the
//! window search, and the closed forms it is checked against.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use gfrob::{
    count_prefix, g_search, g_triangular_closed, triangular_triple, verify_differences, BoundMode,
    Tuple,
};

fn bench_count_prefix(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_prefix");
    let tuple = triangular_triple(20).expect("t_20 triple"); // (210, 231, 253)
    for limit in [1u64 << 12, 1 << 14, 1 << 16] {
        group.throughput(Throughput::Elements(limit));
        group.bench_with_input(BenchmarkId::from_parameter(limit), &limit, |b, &limit| {
            b.iter(|| count_prefix(black_box(limit), black_box(&tuple)).unwrap());
        });
    }
    group.finish();
}

fn bench_g_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("g_search");
    for (label, elements, s) in [
        ("pair_7_11_s5", vec![7u64, 11], 5u64),
        ("triple_3_6_10_s5", vec![3, 6, 10], 5),
        ("t20_triple_s5", vec![210, 231, 253], 5),
    ] {
        let tuple = Tuple::new(elements).unwrap();
        group.bench_function(label, |b| {
            b.iter(|| g_search(black_box(&tuple), black_box(s), 1 << 22).unwrap());
        });
    }
    group.finish();
}

fn bench_closed_form(c: &mut Criterion) {
    c.bench_function("g_triangular_closed_grid", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for n in 20..=40u64 {
                for s in 0..=10u64 {
                    if let Ok(value) = g_triangular_closed(n, s, BoundMode::Strict) {
                        acc ^= value.iter_u64_digits().next().unwrap_or(0);
                    }
                }
            }
            black_box(acc)
        });
    });
}

fn bench_difference_grid(c: &mut Criterion) {
    c.bench_function("verify_differences_50x200", |b| {
        b.iter(|| verify_differences(black_box(50), black_box(200)));
    });
}

criterion_group!(
    kernels,
    bench_count_prefix,
    bench_g_search,
    bench_closed_form,
    bench_difference_grid
);
criterion_main!(kernels);
