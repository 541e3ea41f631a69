//! Rayon backend against the sequential fallback on the same workloads.
//!
//! `par_*` and `seq_*` pairs call `par::map` and `par::seq_map` directly.
//! The end-to-end group uses whichever backend the crate was built with, so
//! compare `cargo bench` with `cargo bench --no-default-features`.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use d2kit_core::coset::{find_normal_generator, group_model, FiniteGroupModel, NormalGeneratorOptions};
use d2kit_core::fp::Presentation;
use d2kit_core::group_ring::{GroupRingElement, GroupRingMatrix};
use d2kit_core::linalg::{smith_normal_form, IntMatrix};
use d2kit_core::par;

const A5: &str = "gens: a b\nrels: a^2, b^3, (a b)^5";

fn random_int_matrices(n: usize, size: usize, seed: u64) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let rows: Vec<Vec<i64>> = (0..size)
                .map(|_| (0..size).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            IntMatrix::from_rows(size, &rows)
        })
        .collect()
}

fn random_group_ring_matrix(model: &Arc<FiniteGroupModel>, size: usize, rng: &mut ChaCha8Rng) -> GroupRingMatrix {
    let entries = (0..size * size)
        .map(|_| {
            let terms: Vec<(usize, i64)> = (0..3)
                .map(|_| (rng.gen_range(0..model.order()), rng.gen_range(-3..=3)))
                .collect();
            GroupRingElement::from_sparse(model, &terms).unwrap()
        })
        .collect();
    GroupRingMatrix::from_entries(model, size, size, entries).unwrap()
}

fn bench_snf_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("snf_batch");
    for size in [6, 10] {
        let batch = random_int_matrices(64, size, 7);
        group.bench_with_input(BenchmarkId::new("par", size), &batch, |b, batch| {
            b.iter(|| par::map(batch, smith_normal_form))
        });
        group.bench_with_input(BenchmarkId::new("seq", size), &batch, |b, batch| {
            b.iter(|| par::seq_map(batch, smith_normal_form))
        });
    }
    group.finish();
}

fn bench_group_ring_products(c: &mut Criterion) {
    let p: Presentation = A5.parse().unwrap();
    let model = Arc::new(group_model(&p, 1000).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pairs: Vec<(GroupRingMatrix, GroupRingMatrix)> = (0..8)
        .map(|_| {
            (
                random_group_ring_matrix(&model, 4, &mut rng),
                random_group_ring_matrix(&model, 4, &mut rng),
            )
        })
        .collect();
    let mut group = c.benchmark_group("a5_compose_batch");
    group.bench_function("par", |b| b.iter(|| par::map(&pairs, |(x, y)| x.compose(y).unwrap())));
    group.bench_function("seq", |b| b.iter(|| par::seq_map(&pairs, |(x, y)| x.compose(y).unwrap())));
    group.finish();
}

fn bench_end_to_end(c: &mut Criterion) {
    let backend = if par::is_parallel() { "rayon" } else { "sequential" };
    let p: Presentation = A5.parse().unwrap();
    let model = Arc::new(group_model(&p, 1000).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = random_group_ring_matrix(&model, 6, &mut rng);
    let mut group = c.benchmark_group("end_to_end");
    group.sample_size(20);
    group.bench_function(BenchmarkId::new("a5_compose_6x6", backend), |b| {
        b.iter(|| m.compose(&m).unwrap())
    });
    group.bench_function(BenchmarkId::new("a5_normal_generator", backend), |b| {
        b.iter(|| find_normal_generator(&p, NormalGeneratorOptions::new(3, 1000)))
    });
    group.finish();
}

criterion_group!(benches, bench_snf_batch, bench_group_ring_products, bench_end_to_end);
criterion_main!(benches);
