//! Benchmarks for the hot exact-arithmetic paths: table solving, operator
//! application, number-sequence generation, series expansion, and CSV
//! emission.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use appell_pade::figures::{figure_csv, FigureId};
use appell_pade::operator::pade_appell;
use appell_pade::pade::{pade_of_amplitude, solve_pade};
use appell_pade::series::PowerSeries;
use appell_pade::umbral::bessel_pade_series;
use appell_pade::{Amplitude, Family, Rational};

fn bench_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_pade");
    for (m, n) in [(2usize, 1usize), (5, 5), (8, 8)] {
        let series = PowerSeries::new(
            (0..=m + n + 1)
                .map(|r| {
                    let sign = if r % 2 == 0 { 1 } else { -1 };
                    Rational::factorial(r).recip() * Rational::int(sign)
                })
                .collect(),
        );
        group.bench_function(format!("exp_neg_{m}_{n}"), |b| {
            b.iter(|| solve_pade(black_box(&series), m, n).unwrap())
        });
    }
    group.finish();
}

fn bench_operator(c: &mut Criterion) {
    c.bench_function("pade_appell/he_3_2_n11", |b| {
        b.iter(|| pade_appell(black_box(&Family::He), 3, 2, 11).unwrap())
    });
    c.bench_function("pade_appell/bernoulli_1_1_n12", |b| {
        b.iter(|| pade_appell(black_box(&Family::Bernoulli), 1, 1, 12).unwrap())
    });
}

fn bench_families(c: &mut Criterion) {
    c.bench_function("exact_polynomial/bernoulli_16", |b| {
        b.iter(|| Family::Bernoulli.exact_polynomial(black_box(16)).unwrap())
    });
    c.bench_function("maclaurin/euler_24", |b| {
        b.iter(|| Amplitude::Euler.maclaurin(black_box(24)))
    });
}

fn bench_bessel(c: &mut Criterion) {
    c.bench_function("bessel_pade_series/k4_25_terms", |b| {
        b.iter(|| bessel_pade_series(black_box(4), 25))
    });
}

fn bench_figures(c: &mut Criterion) {
    c.bench_function("figure_csv/3c_default_grid", |b| {
        b.iter(|| figure_csv(black_box(FigureId::F3c), None).unwrap())
    });
}

criterion_group!(
    benches,
    bench_solver,
    bench_operator,
    bench_families,
    bench_bessel,
    bench_figures
);
criterion_main!(benches);
