use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use wed_bench::{chordal, interval, s123_free, signed_weights};
use wed_core::{brute_force_wed, chordality, find_induced, mwis_chordal, named, s123_wed, square, wed_via_square};

fn bm_chordality(c: &mut Criterion) {
    let mut group = c.benchmark_group("chordality");
    for n in [100, 400, 1600] {
        let g = chordal(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| chordality(black_box(g)))
        });
    }
    group.finish();
}

fn bm_square(c: &mut Criterion) {
    let mut group = c.benchmark_group("square");
    for n in [100, 400, 1600] {
        let (g, _) = interval(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| square(black_box(g)))
        });
    }
    group.finish();
}

fn bm_mwis(c: &mut Criterion) {
    let mut group = c.benchmark_group("mwis_chordal");
    for n in [100, 400, 1600] {
        let g = chordal(n, 3);
        let w = signed_weights(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(g, w), |b, (g, w)| {
            b.iter(|| mwis_chordal(black_box(g), black_box(w)).unwrap())
        });
    }
    group.finish();
}

fn bm_square_engine(c: &mut Criterion) {
    let mut group = c.benchmark_group("wed_via_square");
    group.sample_size(20);
    for n in [200, 400, 800] {
        let (g, w) = interval(n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(g, w), |b, (g, w)| {
            b.iter(|| wed_via_square(black_box(g), black_box(w)))
        });
    }
    group.finish();
}

fn bm_direct_engine(c: &mut Criterion) {
    let mut group = c.benchmark_group("s123_wed");
    group.sample_size(20);
    for n in [16, 32, 64] {
        let (g, w) = s123_free(n, 5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(g, w), |b, (g, w)| {
            b.iter(|| s123_wed(black_box(g), black_box(w)).unwrap())
        });
    }
    group.finish();
}

fn bm_brute_force(c: &mut Criterion) {
    let (g, w) = interval(20, 6);
    c.bench_function("brute_force_wed n=20", |b| {
        b.iter(|| brute_force_wed(black_box(&g), black_box(&w)).unwrap())
    });
}

fn bm_induced(c: &mut Criterion) {
    let net = named("net").unwrap();
    let g = chordal(60, 7);
    c.bench_function("find_induced net n=60", |b| {
        b.iter(|| find_induced(black_box(&g), &net).unwrap())
    });
}

criterion_group!(
    benches,
    bm_chordality,
    bm_square,
    bm_mwis,
    bm_square_engine,
    bm_direct_engine,
    bm_brute_force,
    bm_induced
);
criterion_main!(benches);
