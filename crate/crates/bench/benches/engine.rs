use std::hint::black_box;

use ciext::corpus::{product_pair, residue_pair};
use ciext::groebner::ModuleGb;
use ciext::operators::find_superficial;
use ciext::{EisenbudOperators, ExtComputer, PairAnalysis, Resolution, SuperficialOptions};
use ciext_bench::rational_normal_curve;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner/rational-normal-curve");
    for n in [4, 6, 8] {
        let (q, minors) = rational_normal_curve(n).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| ModuleGb::ideal(&q, black_box(&minors)).unwrap())
        });
    }
    g.finish();
}

fn resolution(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolution/residue");
    g.sample_size(10);
    for codim in [2, 3] {
        let pair = residue_pair(codim, 2).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(codim), &codim, |b, _| {
            b.iter(|| Resolution::new(black_box(&pair.m), 8))
        });
    }
    g.finish();
}

fn ext_profile(c: &mut Criterion) {
    let pair = product_pair(2, 2).unwrap();
    c.bench_function("ext-profile/product r=2 d=2", |b| {
        b.iter(|| {
            let mut ext = ExtComputer::new(&pair.m, &pair.n).unwrap();
            PairAnalysis::compute(&mut ext, 12, true).unwrap()
        })
    });
}

fn operators(c: &mut Criterion) {
    let pair = residue_pair(3, 2).unwrap();
    let res = Resolution::new(&pair.m, 8);
    c.bench_function("eisenbud-operators/residue c=3", |b| {
        b.iter(|| EisenbudOperators::compute(black_box(&res), 8).unwrap())
    });
}

fn superficial(c: &mut Criterion) {
    let pair = product_pair(2, 2).unwrap();
    let mut ext = ExtComputer::new(&pair.m, &pair.n).unwrap();
    let analysis = PairAnalysis::compute(&mut ext, 12, true).unwrap();
    c.bench_function("superficial/product r=2 d=2", |b| {
        b.iter(|| {
            find_superficial(
                &mut ext,
                &analysis.profile,
                analysis.cx,
                &SuperficialOptions::default(),
            )
            .unwrap()
        })
    });
}

criterion_group!(
    benches,
    groebner,
    resolution,
    ext_profile,
    operators,
    superficial
);
criterion_main!(benches);
