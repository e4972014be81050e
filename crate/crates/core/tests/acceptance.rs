//! Acceptance suite: ten end-to-end criteria covering the public surface.
//! Each test prints one `criterion N (...): pass|FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture` to see the lines live.

use appell_pade::error::Error;
use appell_pade::figures::{figure_csv, FigureId};
use appell_pade::grid::{eval_grid, sup_error, Curve, GridSpec};
use appell_pade::identities::{
    closed_form, euler_scaling_residual, flow_residual, ode_residual, operator_route,
    y_recurrence_residual, OdeId, TheoremId,
};
use appell_pade::operator::{
    exact_rational_operator, monomiality_consistency_residual, pade_appell, DiffOperator,
    Monomiality,
};
use appell_pade::pade::{agreement_order, euler_21_quoted, pade_of_amplitude};
use appell_pade::umbral::{bessel_pade_series, umbral_euler_02, umbral_pade_bernoulli};
use appell_pade::verify::exactness_order_sweep;
use appell_pade::{Amplitude, Family, Poly, Rational, Var};

fn criterion(number: usize, title: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let outcome = std::panic::catch_unwind(body);
    let status = if outcome.is_ok() { "pass" } else { "FAIL" };
    println!("criterion {number:>2} ({title}): {status}");
    if let Err(panic) = outcome {
        std::panic::resume_unwind(panic);
    }
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn tp(coeffs: &[&str]) -> Poly {
    Poly::new(Var::T, coeffs.iter().map(|s| q(s)).collect())
}

fn xn(n: usize) -> Poly {
    Poly::monomial(Var::X, Rational::one(), n)
}

#[test]
fn criterion_01_pade_reproduction() {
    criterion(1, "quoted table entries reproduced exactly", || {
        let cases: [(Amplitude, usize, usize, &[&str], &[&str]); 6] = [
            (Amplitude::ExpNeg, 0, 2, &["1"], &["1", "1", "1/2"]),
            (Amplitude::ExpNeg, 1, 1, &["1", "-1/2"], &["1", "1/2"]),
            (Amplitude::ExpNeg, 0, 3, &["1"], &["1", "1", "1/2", "1/6"]),
            (Amplitude::ExpNeg, 2, 1, &["1", "-2/3", "1/6"], &["1", "1/3"]),
            (
                Amplitude::ExpNegHalfSquare,
                3,
                2,
                &["1", "0", "-3/10", "0", "3/80", "0", "-1/480"],
                &["1", "0", "1/5", "0", "1/80"],
            ),
            (Amplitude::Euler, 0, 2, &["1"], &["1", "1/2", "1/4"]),
        ];
        for (amp, m, n, numer, denom) in cases {
            let entry = pade_of_amplitude(&amp, m, n).unwrap();
            assert_eq!(entry.value().numer(), &tp(numer), "[{m}|{n}] {} numerator", amp.name());
            assert_eq!(entry.value().denom(), &tp(denom), "[{m}|{n}] {} denominator", amp.name());
        }
    });
}

#[test]
fn criterion_02_defect_detection() {
    criterion(2, "defective entry rejected, quoted ratio has low order", || {
        let err = pade_of_amplitude(&Amplitude::Euler, 2, 1).unwrap_err();
        assert_eq!(err, Error::PadeDefect { order: 3 });

        // The printed (2,1) ratio only matches the amplitude through t².
        let quoted = euler_21_quoted();
        let series = Amplitude::Euler.maclaurin(8);
        assert_eq!(agreement_order(&quoted, &series), Some(2));
    });
}

#[test]
fn criterion_03_exactness_order() {
    criterion(3, "approximants are exact within the agreement order", || {
        if let Err(msg) = exactness_order_sweep(5, 12) {
            panic!("{msg}");
        }
        assert!(pade_appell(&Family::He, 3, 2, 11).unwrap().matches_exact().unwrap());
        assert!(pade_appell(&Family::He, 1, 1, 4).unwrap().matches_exact().unwrap());
    });
}

#[test]
fn criterion_04_theorem_cross_checks() {
    criterion(4, "closed forms equal operator images", || {
        for id in TheoremId::ALL {
            for n in 0..=12 {
                assert_eq!(
                    closed_form(id, n),
                    operator_route(id, n),
                    "{} at n = {n}",
                    id.name()
                );
            }
        }
    });
}

#[test]
fn criterion_05_ode_residuals() {
    criterion(5, "differential equations annihilate their families", || {
        for n in 0..=10 {
            assert!(
                ode_residual(&OdeId::TruncExpSecondOrder, n).is_zero(),
                "second order at n = {n}"
            );
            assert!(
                ode_residual(&OdeId::HermitePade11ThirdOrder, n).is_zero(),
                "third order at n = {n}"
            );
            for y in [q("1"), q("1/3"), q("-1/4")] {
                assert!(
                    ode_residual(&OdeId::TruncExp2ThirdOrder { y: y.clone() }, n).is_zero(),
                    "order-two third order at n = {n}, y = {y}"
                );
            }
        }
    });
}

#[test]
fn criterion_06_monomiality() {
    criterion(6, "raising and lowering operators close the ladder", || {
        let trunc = exact_rational_operator(&Family::TruncExp { y: Rational::one() }).unwrap();
        let hermite_image = DiffOperator::from_table_entry(
            &pade_of_amplitude(&Amplitude::ExpNeg, 1, 1).unwrap(),
        );
        for op in [&trunc, &hermite_image] {
            let ladder = Monomiality::new(op).unwrap();
            for n in 0..=10 {
                let a_n = op.apply(&xn(n));
                assert_eq!(ladder.raise(&a_n), op.apply(&xn(n + 1)), "raise at n = {n}");
                assert_eq!(
                    ladder.raise(&ladder.lower(&a_n)),
                    a_n.scale(&Rational::int(n as i64)),
                    "index count at n = {n}"
                );
            }
        }
        for op in [&trunc, &hermite_image] {
            for n in 0..=8 {
                assert!(
                    monomiality_consistency_residual(op, n).is_zero(),
                    "index identity at n = {n}"
                );
            }
        }
    });
}

#[test]
fn criterion_07_structural_identities() {
    criterion(7, "parameter derivatives and scaling laws hold", || {
        for n in 0..=10 {
            assert!(y_recurrence_residual(n).is_zero(), "parameter recurrence at n = {n}");
            for family in [
                Family::Hermite1 { y: Rational::one() },
                Family::TruncExp { y: Rational::one() },
            ] {
                assert!(
                    euler_scaling_residual(&family, n).unwrap().is_zero(),
                    "{} scaling at n = {n}",
                    family.name()
                );
            }
        }
        for y in [q("1/2"), q("1"), q("2")] {
            for n in 0..=8 {
                assert!(
                    flow_residual(&Family::TruncExp { y: y.clone() }, n).unwrap().is_zero(),
                    "flow at n = {n}, y = {y}"
                );
            }
        }
    });
}

#[test]
fn criterion_08_umbral_routes() {
    criterion(8, "moment projections agree with operator images", || {
        for n in 0..=3 {
            assert_eq!(
                umbral_pade_bernoulli(1, 1, n).unwrap(),
                Family::Bernoulli.exact_polynomial(n).unwrap(),
                "[1|1] umbral image at n = {n}"
            );
        }
        let gap = &umbral_pade_bernoulli(1, 1, 4).unwrap()
            - &Family::Bernoulli.exact_polynomial(4).unwrap();
        assert_eq!(gap, Poly::constant(Var::X, q("-1/15")));

        let (a, b) = (q("1/2"), q("1/4"));
        for n in 0..=10 {
            let umbral = umbral_euler_02(n, &a, &b);
            assert_eq!(umbral, operator_route(TheoremId::EulerPade02, n), "umbral vs operator at n = {n}");
            assert_eq!(
                umbral,
                pade_appell(&Family::Euler, 0, 2, n).unwrap().value().clone(),
                "umbral vs table image at n = {n}"
            );
        }
    });
}

/// Sup-error windows for the [0|k]-approximated J₀ against the reference
/// Bessel function on [0, 8] with 321 points and the 25-term plotting
/// series. Frozen from an independent exact-fraction evaluation.
const BESSEL_SUP_WINDOWS: [(usize, f64, f64); 3] =
    [(2, 5.69, 5.72), (3, 0.389, 0.392), (4, 0.300, 0.303)];

#[test]
fn criterion_09_bessel() {
    criterion(9, "approximated J0 matches, then tracks, the reference", || {
        let truth = appell_pade::bessel::j0_maclaurin(30);
        for k in [2usize, 3, 4] {
            let series = bessel_pade_series(k, 25);
            for r in 0..=k {
                assert_eq!(
                    series.coefficient(2 * r),
                    truth.coefficient(2 * r),
                    "k = {k} must match J0 at x^{}",
                    2 * r
                );
            }
            assert_ne!(
                series.coefficient(2 * k + 2),
                truth.coefficient(2 * k + 2),
                "k = {k} must leave the table at x^{}",
                2 * (k + 1)
            );
        }

        let grid = GridSpec::new(0.0, 8.0, 321).unwrap();
        let j0 = eval_grid(&Curve::BesselJ0, &grid).unwrap();
        let mut sups = Vec::new();
        for (k, lo, hi) in BESSEL_SUP_WINDOWS {
            let approx =
                eval_grid(&Curve::from_series(&bessel_pade_series(k, 25)), &grid).unwrap();
            let sup = sup_error(&approx, &j0).unwrap();
            assert!(sup > lo && sup < hi, "k = {k}: sup {sup} outside ({lo}, {hi})");
            sups.push(sup);
        }
        assert!(
            sups[2] < sups[1] && sups[1] < sups[0],
            "sup errors must shrink with k: {sups:?}"
        );
    });
}

#[test]
fn criterion_10_deterministic_output() {
    criterion(10, "figure CSV is byte-stable and matches the goldens", || {
        for id in FigureId::ALL {
            assert_eq!(
                figure_csv(id, None).unwrap(),
                figure_csv(id, None).unwrap(),
                "repeated emission of {id}"
            );
        }
        let goldens: [(FigureId, &str); 3] = [
            (FigureId::F1a, include_str!("golden/fig1a.csv")),
            (FigureId::F4a, include_str!("golden/fig4a.csv")),
            (FigureId::F5a, include_str!("golden/fig5a.csv")),
        ];
        for (id, golden) in goldens {
            assert_eq!(figure_csv(id, None).unwrap(), golden, "golden bytes for {id}");
        }
    });
}
