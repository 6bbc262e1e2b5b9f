//! Hot-path timings: exact resistance solves, determinants, enumeration,
//! and canonical labeling on representative cactus workloads.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use drd_core::families::build_g0;
use drd_core::resistance::laplacian;
use drd_core::{canonical_form, enumerate_cacti, invariant_report, resistance_matrix};

fn bench_resistance(c: &mut Criterion) {
    // Hub cactus with three triangles and five pendants: 12 vertices.
    let g = build_g0(12, 3).unwrap();
    c.bench_function("resistance_matrix/g0(12,3)", |b| {
        b.iter(|| resistance_matrix(black_box(&g)).unwrap())
    });
    c.bench_function("invariant_report/g0(12,3)", |b| {
        b.iter(|| invariant_report(black_box(&g)).unwrap())
    });
}

fn bench_determinant(c: &mut Criterion) {
    let g = build_g0(12, 3).unwrap();
    let minor = laplacian(&g).minor(&[0], &[0]);
    c.bench_function("bareiss_determinant/11x11", |b| {
        b.iter(|| black_box(&minor).determinant().unwrap())
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_cacti/(8,2)", |b| {
        b.iter(|| enumerate_cacti(black_box(8), black_box(2)).unwrap())
    });
}

fn bench_canonical_form(c: &mut Criterion) {
    // Friendship graph: five triangles through one hub, highly symmetric.
    let g = build_g0(11, 5).unwrap();
    c.bench_function("canonical_form/friendship(11,5)", |b| {
        b.iter(|| canonical_form(black_box(&g)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_resistance,
    bench_determinant,
    bench_enumeration,
    bench_canonical_form
);
criterion_main!(benches);
