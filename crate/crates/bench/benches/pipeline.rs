use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use swan_core::autos::AutomorphismGroup;
use swan_core::chains::{degree_of_comparison, periodic_resolution, pullback_c0};
use swan_core::classify::stabilization_counts;
use swan_core::lambda_units::{gamma_unit_verification, lambda_unit_kernel};
use swan_core::lattice::{snf, IntMatrix};
use swan_core::swan::{is_free, table, Rho2Map, SwanInput};

fn swan(c: &mut Criterion) {
    let input = SwanInput::new(7, 15).unwrap();
    is_free(&input).unwrap();
    c.bench_function("is_free p=7 r=15", |b| b.iter(|| is_free(black_box(&input)).unwrap()));
    c.bench_function("rho2 context p=7", |b| b.iter(|| Rho2Map::new(black_box(7)).unwrap()));
    c.bench_function("table p=7", |b| b.iter(|| table(black_box(7)).unwrap()));
    c.bench_function("classify p=7 n=7", |b| b.iter(|| stabilization_counts(black_box(7), 7).unwrap()));
}

fn units(c: &mut Criterion) {
    c.bench_function("lambda unit kernel p=7", |b| b.iter(|| lambda_unit_kernel(black_box(7)).unwrap()));
    c.bench_function("gamma verification p=7", |b| b.iter(|| gamma_unit_verification(black_box(7)).unwrap()));
}

fn autos(c: &mut Criterion) {
    c.bench_function("Aut(Q(16,5,1))", |b| b.iter(|| AutomorphismGroup::new(black_box(5)).unwrap()));
}

fn chains(c: &mut Criterion) {
    let mut group = c.benchmark_group("chains");
    group.sample_size(10);
    group.bench_function("resolution Q56", |b| b.iter(|| periodic_resolution(black_box(7), 1).unwrap()));
    let res = periodic_resolution(7, 1).unwrap();
    group.bench_function("pullback degree r=15", |b| {
        b.iter(|| degree_of_comparison(&pullback_c0(black_box(&res), 15).unwrap()).unwrap())
    });
    let d2 = res.boundary(2).unwrap().clone();
    group.bench_function("snf 112x112", |b| b.iter(|| snf(black_box(&d2)).unwrap()));
    group.finish();
    let id = IntMatrix::identity(8);
    c.bench_function("snf identity 8", |b| b.iter(|| snf(black_box(&id)).unwrap()));
}

criterion_group!(benches, swan, units, autos, chains);
criterion_main!(benches);
