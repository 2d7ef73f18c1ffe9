use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hup_core::classifier::classify_fiber;
use hup_core::curves::exp_curve_ft;
use hup_core::linsys::{appendix_a_reduce, solve_power_system};
use hup_core::sympoly::{complete_homogeneous, unit_phase};
use hup_core::{
    Complex64, CurveDensity, Density, DensityAtom, OscillationBudget, PowerSystem, Tolerances,
    UnimodularTuple,
};

fn phases(count: usize) -> Vec<f64> {
    // spread over the circle without hitting rational coincidences
    (0..count).map(|i| (0.618_033_988_749 * i as f64 + 0.1).rem_euclid(2.0)).collect()
}

fn symmetric(c: &mut Criterion) {
    let xs: Vec<Complex64> = phases(8).into_iter().map(unit_phase).collect();
    c.bench_function("complete_homogeneous k=40 m=8", |b| {
        b.iter(|| complete_homogeneous(black_box(40), black_box(&xs)))
    });
}

fn linear(c: &mut Criterion) {
    let tol = Tolerances::default();
    let nodes: Vec<Complex64> = phases(8).into_iter().map(unit_phase).collect();
    let sys = PowerSystem::canonical(nodes);
    c.bench_function("solve_power_system m=8", |b| {
        b.iter(|| solve_power_system(black_box(&sys), &tol).unwrap())
    });
    let betas = UnimodularTuple::from_phases(&phases(7));
    c.bench_function("appendix_a_reduce n=5 p=12", |b| {
        b.iter(|| appendix_a_reduce(black_box(&betas), 5, 12, &tol).unwrap())
    });
}

fn classifier(c: &mut Criterion) {
    let tol = Tolerances::default();
    let etas = phases(10);
    c.bench_function("classify_fiber m=10 n=3 p=6", |b| {
        b.iter(|| classify_fiber(black_box(&etas), 3, 6, &tol).unwrap())
    });
}

fn curves(c: &mut Criterion) {
    let tol = Tolerances::default();
    let budget = OscillationBudget::standard();
    let g = CurveDensity::from_density(Density::from(DensityAtom::unit_gaussian()), 2.5).unwrap();
    let mut group = c.benchmark_group("exp_curve_ft");
    group.sample_size(20);
    for y in [1.0, 10.0] {
        group.bench_function(format!("y={y}"), |b| {
            b.iter(|| exp_curve_ft(&g, black_box(0.7), black_box(y), &budget, &tol).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, symmetric, linear, classifier, curves);
criterion_main!(benches);
