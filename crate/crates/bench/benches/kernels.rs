//! Benchmarks for the kernels that dominate verification sweeps: exact
//! construction, multiplication, elimination, and the Jacobi eigensolver.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use wheeldist::elimination::{determinant, gauss_jordan_inverse, rank};
use wheeldist::theorems::WheelSystem;
use wheeldist::{distance_matrix, special_laplacian, symmetric_eigenvalues};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    for n in [64usize, 256] {
        group.bench_with_input(BenchmarkId::new("distance_matrix", n), &n, |b, &n| {
            b.iter(|| distance_matrix(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("special_laplacian", n), &n, |b, &n| {
            b.iter(|| special_laplacian(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn multiplication(c: &mut Criterion) {
    let mut group = c.benchmark_group("multiplication");
    group.sample_size(20);
    for n in [64usize, 128] {
        let sys = WheelSystem::new(n).unwrap();
        let inv = sys.closed_form_inverse().total;
        group.bench_with_input(BenchmarkId::new("inverse_times_d", n), &n, |b, _| {
            b.iter(|| black_box(&inv).mul(black_box(&sys.distance)))
        });
    }
    group.finish();
}

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("elimination");
    group.sample_size(10);
    for n in [32usize, 64] {
        let d = distance_matrix(n).unwrap();
        let l = special_laplacian(n).unwrap();
        group.bench_with_input(BenchmarkId::new("determinant", n), &n, |b, _| {
            b.iter(|| determinant(black_box(&d)))
        });
        group.bench_with_input(BenchmarkId::new("rank", n), &n, |b, _| {
            b.iter(|| rank(black_box(&l)))
        });
        group.bench_with_input(BenchmarkId::new("gauss_jordan_inverse", n), &n, |b, _| {
            b.iter(|| gauss_jordan_inverse(black_box(&d)).unwrap())
        });
    }
    group.finish();
}

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigensolver");
    group.sample_size(10);
    for n in [32usize, 96] {
        let l = special_laplacian(n).unwrap();
        group.bench_with_input(BenchmarkId::new("jacobi_laplacian", n), &n, |b, _| {
            b.iter(|| symmetric_eigenvalues(black_box(&l)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    construction,
    multiplication,
    elimination,
    eigensolver
);
criterion_main!(benches);
