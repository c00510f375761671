//! Sequential against data-parallel execution for the two hot kernels:
//! enumerated left-hand sides and truncated series multiplication.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hookpart::identities::registry::Lhs;
use hookpart::identities::{lhs_series_with, lookup};
use hookpart::series::euler;
use hookpart::Exec;

const STRATEGIES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn lhs(c: &mut Criterion) {
    let mut group = c.benchmark_group("lhs_series");
    group.sample_size(10);
    for id in ["nekrasov-okounkov", "sc-master"] {
        let rec = lookup(id).unwrap();
        let p = rec.default_params();
        let Lhs::Enumerated(spec) = (rec.lhs)(&p).unwrap() else {
            continue;
        };
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, id), &spec, |b, spec| {
                b.iter(|| lhs_series_with(black_box(spec), p.n, p.dz, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("series_mul");
    group.sample_size(10);
    for n in [40, 80] {
        let a = euler(n, 6).inverse().unwrap();
        let b = euler(n, 6).powi(3).unwrap();
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |bch, _| {
                bch.iter(|| black_box(&a).mul_with(black_box(&b), exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, lhs, mul);
criterion_main!(benches);
