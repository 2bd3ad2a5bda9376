//! Verification on a one-thread pool against the default pool.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopfgal::comodule::is_galois;
use hopfgal::constructions::{taft_galois_object, taft_hopf, uq_sl2_pipeline, TaftParams};
use hopfgal::homotopy::{taft_homotopy_witness, verify_poly_galois};
use hopfgal::scalars::Field;
use rayon::ThreadPool;

fn pools() -> Vec<(&'static str, ThreadPool)> {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    vec![("sequential", one), ("parallel", all)]
}

fn bench(c: &mut Criterion) {
    let f = Field::prime(7).unwrap();
    let q = f.from_i64(2);
    let double = uq_sl2_pipeline(3, &q, &f, &f.from_i64(2)).unwrap().double;
    let h = Arc::new(taft_hopf(3, &q, &f).unwrap());
    let a = taft_galois_object(&TaftParams::new(3, q.clone(), f.from_i64(3), f.from_i64(5)).unwrap(), &h).unwrap();
    let w = taft_homotopy_witness(3, &q, &f, &f.from_i64(3), &f.from_i64(5)).unwrap();

    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_with_input(BenchmarkId::new("double_axioms", name), &pool, |b, p| {
            b.iter(|| p.install(|| assert!(double.verify().passed())))
        });
        g.bench_with_input(BenchmarkId::new("taft_galois", name), &pool, |b, p| {
            b.iter(|| p.install(|| assert!(is_galois(&a).unwrap().is_galois())))
        });
        g.bench_with_input(BenchmarkId::new("witness_determinant", name), &pool, |b, p| {
            b.iter(|| p.install(|| assert!(verify_poly_galois(&w).unwrap().is_galois())))
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
