use criterion::{black_box, criterion_group, criterion_main, Criterion};

use quohal::hopfmod::{structure_freeness, verify_hopf_module};
use quohal::modrep::{iso_test, DEFAULT_TRIALS};
use quohal::quasi::verify_all;
use quohal_bench::{cofree_regular, dense_matrix, fz4w, iso_pair};

fn kernels(c: &mut Criterion) {
    for n in [16, 64] {
        let m = dense_matrix(n, 3);
        c.bench_function(&format!("kernel {n}x{n} GF(101)"), |b| b.iter(|| black_box(&m).kernel()));
    }
    let h = fz4w();
    c.bench_function("verify_all fZ4w", |b| b.iter(|| verify_all(black_box(&h))));
    let (m, n) = iso_pair();
    c.bench_function("iso_test fZ4w regular^2", |b| b.iter(|| iso_test(&m, &n, 0, DEFAULT_TRIALS).unwrap()));
    let hm = cofree_regular();
    c.bench_function("verify_hopf_module cofree fZ4w", |b| b.iter(|| verify_hopf_module(&hm).unwrap()));
    c.bench_function("structure_freeness cofree fZ4w", |b| b.iter(|| structure_freeness(&hm, 0, DEFAULT_TRIALS).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = kernels
}
criterion_main!(benches);
