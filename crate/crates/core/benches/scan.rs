use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rgdlin::{Bounds, CoxeterMatrix, CoxeterSystem, Execution, RootBasis};

fn divergence_scan_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("divergence_scan");
    group.sample_size(10);
    for (name, matrix, length) in [
        ("universal3", CoxeterMatrix::universal3(), 3),
        ("type444", CoxeterMatrix::type444(), 3),
    ] {
        let basis = RootBasis::canonical(&matrix);
        let bounds = Bounds::with_radius(6);
        for (mode, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(mode, name), &exec, |b, &exec| {
                b.iter(|| {
                    // A fresh system per iteration keeps ball and normal-form
                    // caches from carrying over between runs.
                    let sys = CoxeterSystem::new(matrix.clone());
                    rgdlin::interval::divergence_scan(&sys, &basis, length, &bounds, exec).unwrap()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, divergence_scan_modes);
criterion_main!(benches);
