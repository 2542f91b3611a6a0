//! Benchmarks for the F2 brute-force oracles, comparing the library path
//! (parallel when the default `parallel` feature is on) against a
//! hand-rolled sequential baseline built from the same public primitives.
//! Building with `--no-default-features` makes the library path sequential
//! too, which is the fallback the baseline mirrors.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use codomin::catalog::{self, CayleyTable};
use codomin::enumerate::{
    all_subspaces_f2, coalgebra_morphisms_f2, coideals_f2, is_delta_stable, matrix_from_index,
    max_delta_stable_subspace,
};
use codomin::linalg::{ExactMatrix, Subspace};
use codomin::scalars::Field;
use codomin::structures::{coideal_violation, is_coalgebra_morphism, Coalgebra};

fn f2() -> Field {
    Field::prime(2).unwrap()
}

fn sequential_morphisms(src: &Coalgebra, dst: &Coalgebra) -> Vec<ExactMatrix> {
    let bits = src.dim() * dst.dim();
    (0..1usize << bits)
        .filter_map(|idx| {
            let m = matrix_from_index(src.field(), dst.dim(), src.dim(), idx);
            is_coalgebra_morphism(src, dst, &m).then_some(m)
        })
        .collect()
}

fn sequential_stable(c: &Coalgebra, v: &Subspace) -> Subspace {
    let mut acc = Subspace::zero(c.field(), c.dim());
    for w in all_subspaces_f2(c.field(), c.dim()).unwrap() {
        if v.contains(&w).unwrap() && is_delta_stable(c, &w) {
            acc = acc.sum(&w).unwrap();
        }
    }
    acc
}

fn sequential_coideals(c: &Coalgebra) -> Vec<Subspace> {
    all_subspaces_f2(c.field(), c.dim())
        .unwrap()
        .into_iter()
        .filter(|k| coideal_violation(c, k).is_none())
        .collect()
}

fn bench_morphism_enumeration(c: &mut Criterion) {
    let field = f2();
    let src = catalog::divided_power(&field, 3).unwrap();
    let dst = catalog::group_algebra(&field, &CayleyTable::cyclic(4)).unwrap();
    let (sc, dc) = (src.coalgebra().unwrap(), dst.coalgebra().unwrap());

    let mut group = c.benchmark_group("morphism_enumeration_4096");
    group.sample_size(20);
    group.bench_function("library", |b| {
        b.iter(|| black_box(coalgebra_morphisms_f2(sc, dc).unwrap()))
    });
    group.bench_function("sequential_baseline", |b| {
        b.iter(|| black_box(sequential_morphisms(sc, dc)))
    });
    group.finish();
}

fn bench_stable_subspace_oracle(c: &mut Criterion) {
    let field = f2();
    let klein = catalog::group_algebra(
        &field,
        &CayleyTable::product(&CayleyTable::cyclic(2), &CayleyTable::cyclic(2)),
    )
    .unwrap();
    let kc = klein.coalgebra().unwrap();
    let full = Subspace::full(&field, 4);

    let mut group = c.benchmark_group("stable_subspace_oracle_dim4");
    group.sample_size(20);
    group.bench_function("library", |b| {
        b.iter(|| black_box(max_delta_stable_subspace(kc, &full).unwrap()))
    });
    group.bench_function("sequential_baseline", |b| {
        b.iter(|| black_box(sequential_stable(kc, &full)))
    });
    group.finish();
}

fn bench_coideal_enumeration(c: &mut Criterion) {
    let field = f2();
    let m2c = catalog::comatrix(&field, 2).unwrap();
    let cc = m2c.coalgebra().unwrap();

    let mut group = c.benchmark_group("coideal_enumeration_dim4");
    group.sample_size(20);
    group.bench_function("library", |b| {
        b.iter(|| black_box(coideals_f2(cc).unwrap()))
    });
    group.bench_function("sequential_baseline", |b| {
        b.iter(|| black_box(sequential_coideals(cc)))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_morphism_enumeration,
    bench_stable_subspace_oracle,
    bench_coideal_enumeration
);
criterion_main!(benches);
