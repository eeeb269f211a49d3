use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopfq::hopf::validate_hopf_quasigroup_with;
use hopfq::loops::builtin_group;
use hopfq::products::{actions_from_skew_pairing, double_cross_product, parity_pairing, validate_matched_pair_with};
use hopfq::{comp, tens, Diagram, Exec, Field};

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn kernels(c: &mut Criterion) {
    let q = Field::Rational;
    let mp = actions_from_skew_pairing(&parity_pairing(&builtin_group("s3").unwrap(), q).unwrap()).unwrap();
    let x = double_cross_product(&mp).unwrap();

    let g = x.gens("");
    // (μ ⊗ μ)(X ⊗ c ⊗ X)(δ ⊗ δ): the bimonoid compatibility side on 2304 columns.
    let compat = comp(&[&tens(&[&g.mu, &g.mu]), &tens(&[&g.id, &g.c, &g.id]), &tens(&[&g.delta, &g.delta])]);
    let mut group = c.benchmark_group("diagram_to_linmap_dim48");
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| b.iter(|| compat.to_linmap(e)));
    }
    group.finish();

    let mut group = c.benchmark_group("validate_hopf_quasigroup_dim48");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| validate_hopf_quasigroup_with(&x, e))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("validate_matched_pair_12x4");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| validate_matched_pair_with(&mp, e))
        });
    }
    group.finish();

    let id = Diagram::id(q, &[48]);
    let twisted = comp(&[&g.mu, &tens(&[&g.lam, &id]), &g.delta]);
    let mut group = c.benchmark_group("convolution_lambda_id_dim48");
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| b.iter(|| twisted.to_linmap(e)));
    }
    group.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
