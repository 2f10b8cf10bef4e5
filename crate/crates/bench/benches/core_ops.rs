//! Timings for the hot paths: basis construction (closed-form and
//! Buchberger), minimal-prime enumeration, and closure saturation.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use bei_bench::star_graph;
use bei_core::graph::{complete_graph, cycle_graph, path_graph};
use bei_core::{
    buchberger_reduced, closure, edge_generators, minimal_primes, theoretical_groebner, xy_order,
    Bounds, Polynomial,
};

fn basis_benches(c: &mut Criterion) {
    let bounds = Bounds::default();

    let path = path_graph(8).unwrap();
    c.bench_function("theoretical_groebner/path_8", |b| {
        b.iter(|| theoretical_groebner(black_box(&path), &bounds).unwrap())
    });

    let k5 = complete_graph(5).unwrap();
    c.bench_function("theoretical_groebner/k5", |b| {
        b.iter(|| theoretical_groebner(black_box(&k5), &bounds).unwrap())
    });

    let k4 = complete_graph(4).unwrap();
    let gens: Vec<Polynomial> = edge_generators(&k4)
        .iter()
        .map(|e| e.polynomial().clone())
        .collect();
    let ord = xy_order(4);
    c.bench_function("buchberger/k4", |b| {
        b.iter(|| buchberger_reduced(black_box(&gens), &ord).unwrap())
    });
}

fn decomposition_benches(c: &mut Criterion) {
    let bounds = Bounds::default();

    let cycle = cycle_graph(10).unwrap();
    c.bench_function("minimal_primes/cycle_10", |b| {
        b.iter(|| minimal_primes(black_box(&cycle), &bounds).unwrap())
    });

    let star = star_graph(12);
    c.bench_function("closure/star_12", |b| b.iter(|| closure(black_box(&star))));
}

criterion_group!(benches, basis_benches, decomposition_benches);
criterion_main!(benches);
