use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use constacyclic::{AmbientRing, Enumeration, Exec, Params};

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn oracle(c: &mut Criterion) {
    let p = Params::with_degree(1, 1, 2, 2, 1, 1).unwrap();
    let ring = AmbientRing::new(&p);
    let mut group = c.benchmark_group("brute_force_ideals");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| ring.brute_force_ideals(exec, 16).unwrap().members.len())
        });
    }
    group.finish();
}

fn catalog_verification(c: &mut Criterion) {
    let p = Params::with_degree(2, 1, 2, 2, 1, 1).unwrap();
    let en = Enumeration::build(&p).unwrap();
    let mut group = c.benchmark_group("catalog_verify_m2");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| en.catalogs[0].verify(&en.chains[0], exec, 1 << 20).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, oracle, catalog_verification);
criterion_main!(benches);
