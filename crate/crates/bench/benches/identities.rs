use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lcalc_core::doubling::{d_tau_closed, d_tau_gk, gl_reduction_sides, psi_series_sides};
use lcalc_core::exactalg::{sampled_equal, RationalSampler};
use lcalc_core::symmfunc::{schur, DominantWeight};
use lcalc_core::{GroupData, SatakeSet, VarId};

fn sym(prefix: &str, k: usize) -> SatakeSet {
    SatakeSet::symbolic(prefix, k)
}

fn telescoping(c: &mut Criterion) {
    let mut g = c.benchmark_group("d_tau");
    for (n, k) in [(2, 2), (4, 4)] {
        let group = GroupData::sp(n);
        let tau = sym("x", k);
        g.bench_with_input(BenchmarkId::new("gk_product", format!("n{n}k{k}")), &tau, |b, tau| {
            b.iter(|| d_tau_gk(group, k, black_box(tau)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("closed", format!("n{n}k{k}")), &tau, |b, tau| {
            b.iter(|| d_tau_closed(group, k, black_box(tau)).unwrap())
        });
    }
    g.finish();
}

fn gl_reduction(c: &mut Criterion) {
    let (n, k) = (4, 2);
    let (tau, tp, pa, pb) = (sym("x", k), sym("y", k), sym("a", 2), sym("b", 2));
    c.bench_function("gl_reduction n4k2 exact", |b| {
        b.iter(|| {
            let (l, r) = gl_reduction_sides(n, 2, 2, k, &pa, &pb, &tau, &tp, (k * n) as i32).unwrap();
            assert!(l.rf_equal(&r));
        })
    });
    let (l, r) = gl_reduction_sides(n, 2, 2, k, &pa, &pb, &tau, &tp, (k * n) as i32).unwrap();
    c.bench_function("gl_reduction n4k2 sampled", |b| {
        b.iter(|| sampled_equal(&l, &r, &mut RationalSampler::new(1), 3).unwrap())
    });
}

fn psi_series(c: &mut Criterion) {
    let p = VarId::param("p");
    let mut g = c.benchmark_group("psi_series");
    g.sample_size(10);
    for k in [1, 2] {
        g.bench_function(BenchmarkId::from_parameter(k), |b| {
            b.iter(|| psi_series_sides(k, &p, &sym("x", k), &sym("y", k), 8, true).unwrap())
        });
    }
    g.finish();
}

fn schur_poly(c: &mut Criterion) {
    let vars = sym("x", 4);
    let lambda = DominantWeight::new(vec![3, 2, 1, 0]).unwrap();
    c.bench_function("schur (3,2,1,0)", |b| b.iter(|| schur(black_box(&lambda), &vars).unwrap()));
}

criterion_group!(benches, telescoping, gl_reduction, psi_series, schur_poly);
criterion_main!(benches);
