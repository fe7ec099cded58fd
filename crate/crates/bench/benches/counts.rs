use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use qmc_core::gfengine::{counts_via_gf, gf_build, limit_eval, GfKind, LimitKind};
use qmc_core::oracle::{census, OracleConfig};
use qmc_core::{FieldSpec, PrimePower};

fn q(n: u64) -> PrimePower {
    PrimePower::new(n).unwrap()
}

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("gf_build");
    for kind in [GfKind::Cyclic, GfKind::Semisimple, GfKind::ConjclassesGl] {
        g.bench_function(format!("{}/q2/order16", kind.name()), |b| {
            b.iter(|| gf_build(black_box(kind), q(2), 16).unwrap())
        });
    }
    g.bench_function("diagonalizable/q3/n12", |b| {
        b.iter(|| counts_via_gf(black_box(GfKind::Diagonalizable), q(3), 12).unwrap())
    });
    g.finish();
}

fn limits(c: &mut Criterion) {
    let mut g = c.benchmark_group("limit_eval");
    for digits in [5usize, 30] {
        g.bench_function(format!("cyclic/q2/{digits}"), |b| {
            b.iter(|| limit_eval(LimitKind::Cyclic, q(2), black_box(digits)).unwrap())
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let field = FieldSpec::of_order(q(2)).unwrap();
    let config = OracleConfig::default();
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("q2/n3", |b| b.iter(|| census(&field, black_box(3), &config).unwrap()));
    g.finish();
}

criterion_group!(benches, series, limits, oracle);
criterion_main!(benches);
