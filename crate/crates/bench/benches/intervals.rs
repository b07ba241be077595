use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tamari_core::{enumerate_intervals, interval_stats, rise_contact, IntervalPoset};

fn pool(n: usize) -> Vec<IntervalPoset> {
    enumerate_intervals(n).collect()
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate n=6", |b| b.iter(|| enumerate_intervals(black_box(6)).count()));
}

fn involution(c: &mut Criterion) {
    let all = pool(6);
    c.bench_function("rise_contact n=6", |b| {
        b.iter(|| all.iter().map(|p| rise_contact(p).relation_count()).sum::<usize>())
    });
}

fn statistics(c: &mut Criterion) {
    let all = pool(6);
    c.bench_function("distance n=6", |b| b.iter(|| all.iter().map(IntervalPoset::distance).sum::<usize>()));
    c.bench_function("interval_stats n=6", |b| {
        b.iter(|| all.iter().map(|p| interval_stats(p).distance).sum::<usize>())
    });
}

criterion_group!(benches, enumeration, involution, statistics);
criterion_main!(benches);
