use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use okamoto_algebra::{Exec, Matrix, RF};

fn generic(n: usize, offset: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        let v = RF::var((i + j + offset) % 6);
        if i == j {
            &v + &RF::int(1)
        } else {
            &v / &RF::var((i * 3 + j + 1) % 6)
        }
    })
}

fn bench_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("matrix_mul");
    for n in [3usize, 6] {
        let a = generic(n, 0);
        let b = generic(n, 2);
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), n), &n, |bench, _| {
                bench.iter(|| a.mul_with(&b, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_mul);
criterion_main!(benches);
