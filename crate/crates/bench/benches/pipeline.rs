use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;
use tenpoint_bench::sweep;
use tenpoint_core::{build_configuration, derive_figures, verify_all, ConfigurationSeed};

fn reference(c: &mut Criterion) {
    let seed = ConfigurationSeed::reference();
    let config = build_configuration(&seed).unwrap();
    c.bench_function("build/reference", |b| b.iter(|| build_configuration(black_box(&seed)).unwrap()));
    c.bench_function("derive/reference", |b| b.iter(|| derive_figures(black_box(&config))));
    c.bench_function("verify/reference", |b| b.iter(|| verify_all(black_box(&config))));
}

fn sweep_batch(c: &mut Criterion) {
    let configs = sweep(16);
    let mut group = c.benchmark_group("sweep16");
    group.sample_size(20);
    group.bench_function("build", |b| {
        b.iter_batched(|| configs.iter().map(|(s, _)| s.clone()).collect::<Vec<_>>(), |seeds| {
            seeds.iter().map(|s| build_configuration(s).unwrap()).collect::<Vec<_>>()
        }, BatchSize::SmallInput)
    });
    group.bench_function("verify", |b| b.iter(|| configs.iter().map(|(_, c)| verify_all(c).summary.fail).sum::<usize>()));
    group.finish();
}

criterion_group!(benches, reference, sweep_batch);
criterion_main!(benches);
