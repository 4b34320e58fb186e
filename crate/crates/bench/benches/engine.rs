use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qtetra_bench::{genset, sample_scalar};
use qtetra_core::monop::OpSum;
use qtetra_core::qgroup::{mfor_lhs, mfor_rhs};
use qtetra_core::series::{psi_series, FactorParam};
use qtetra_core::verify::{run_suite, SuiteConfig};

fn scalar_ops(c: &mut Criterion) {
    let a = sample_scalar(4);
    let b = sample_scalar(6);
    c.bench_function("qrat_mul_reduce", |bench| {
        bench.iter(|| black_box(&a) * black_box(&b))
    });
    c.bench_function("qrat_add_reduce", |bench| {
        bench.iter(|| black_box(&a) + black_box(&b))
    });
}

fn opsum_compose(c: &mut Criterion) {
    let gs = genset(3);
    let e = gs.kappa_e(1).clone();
    let f = gs.kappa_f(2).clone();
    c.bench_function("opsum_compose_9vars", |bench| {
        bench.iter(|| black_box(&e).compose(black_box(&f)).unwrap())
    });
    let ef = e.tensor(&f);
    c.bench_function("opsum_pow4_18vars", |bench| {
        bench.iter(|| black_box(&ef).pow(4).unwrap())
    });
}

fn series_products(c: &mut Criterion) {
    let gs = genset(2);
    let arg = OpSum::from(gs.e(1, 1).tensor(gs.f(1, 2)));
    let psi = psi_series(&["x"], 6, &[1], &arg).unwrap();
    c.bench_function("psi_series_mul_cap6", |bench| {
        bench.iter(|| black_box(&psi).mul(black_box(&psi)).unwrap())
    });
    c.bench_function("mfor_sides_n2_cap3", |bench| {
        bench.iter(|| {
            let lhs = mfor_lhs(&gs, &["x"], 3).unwrap();
            let rhs = mfor_rhs(&gs, &["x"], 3).unwrap();
            black_box(lhs == rhs)
        })
    });
}

fn monodromy_trace(c: &mut Criterion) {
    c.bench_function("transfer_trace_n2_cap2", |bench| {
        bench.iter(|| {
            qtetra_core::qgroup::build_r_traced(
                &["x1", "x2"],
                2,
                2,
                &[FactorParam::Monomial(vec![1, 0]), FactorParam::Zero],
            )
            .unwrap()
        })
    });
}

fn suites(c: &mut Criterion) {
    c.bench_function("suite_prop1", |bench| {
        bench.iter(|| run_suite(&SuiteConfig::new("prop1", 2, 0)).unwrap())
    });
    c.bench_function("suite_te_spectral_cap3", |bench| {
        bench.iter(|| run_suite(&SuiteConfig::new("te-spectral", 2, 3)).unwrap())
    });
}

criterion_group!(
    benches,
    scalar_ops,
    opsum_compose,
    series_products,
    monodromy_trace,
    suites
);
criterion_main!(benches);
