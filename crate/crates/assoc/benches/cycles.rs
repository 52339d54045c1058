use criterion::{criterion_group, criterion_main, Criterion};
use okamoto_algebra::Exec;
use okamoto_assoc::{path_independence, FlipGraph};

fn bench_cycles(c: &mut Criterion) {
    let g = FlipGraph::enumerate();
    let mut group = c.benchmark_group("path_independence");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| b.iter(|| path_independence(&g, exec)));
    }
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    c.bench_function("enumerate", |b| b.iter(FlipGraph::enumerate));
}

criterion_group!(benches, bench_cycles, bench_enumerate);
criterion_main!(benches);
