//! Named re-runnable checks over every identity and invariant in the crate,
//! grouped into suites. Each check either passes or reports what broke; the
//! CLI renders the reports as a table and drives its exit status off them.

use std::fmt;
use std::str::FromStr;

use crate::amplitude::Amplitude;
use crate::bessel::{j0_maclaurin, reference_j0};
use crate::error::Error;
use crate::families::{bernoulli_number, chebyshev_u, Family};
use crate::figures::{figure_csv, FigureId, BESSEL_FIGURE_TERMS};
use crate::grid::{eval_grid, sup_error, Curve, GridSpec};
use crate::identities::{
    closed_form, euler_scaling_residual, flow_residual, ode_residual, operator_route,
    y_recurrence_residual, OdeId, TheoremId,
};
use crate::operator::{
    exact_rational_operator, monomiality_consistency_residual, pade_appell, DiffOperator,
    Monomiality,
};
use crate::pade::{agreement_order, euler_21_quoted, pade_of_amplitude};
use crate::poly::{Poly, Var};
use crate::ratfunc::RationalFunction;
use crate::rational::Rational;
use crate::umbral::{
    bernoulli_order2, bessel_pade_series, umbral_bernoulli_closed_form, umbral_euler_02,
    umbral_euler_12, umbral_pade_bernoulli, MomentFunctional,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Pade,
    Theorems,
    Odes,
    Monomiality,
    Structural,
    Umbral,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Pade,
        Suite::Theorems,
        Suite::Odes,
        Suite::Monomiality,
        Suite::Structural,
        Suite::Umbral,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Pade => "pade",
            Suite::Theorems => "theorems",
            Suite::Odes => "odes",
            Suite::Monomiality => "monomiality",
            Suite::Structural => "structural",
            Suite::Umbral => "umbral",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub suite: Suite,
    pub error: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.error.is_none()
    }
}

type CheckResult = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog() -> Vec<Family> {
    vec![
        Family::Hermite1 { y: Rational::int(-1) },
        Family::He,
        Family::TruncExp { y: Rational::one() },
        Family::Hermite2 { y: Rational::one() },
        Family::Euler,
        Family::Bernoulli,
    ]
}

// ---- pade suite ------------------------------------------------------------

fn pade_normalization() -> CheckResult {
    for family in catalog() {
        let amp = family.catalog_amplitude().expect("catalog families have amplitudes");
        for m in 0..=4 {
            for n in 0..=(4 - m) {
                let Ok(entry) = pade_of_amplitude(&amp, m, n) else { continue };
                check(entry.value().denom().coefficient(0).is_one(), || {
                    format!("{} [{m}|{n}] denominator constant is not 1", amp.name())
                })?;
            }
        }
    }
    Ok(())
}

fn pade_agreement_order() -> CheckResult {
    for family in catalog() {
        let amp = family.catalog_amplitude().expect("catalog families have amplitudes");
        for m in 0..=4 {
            for n in 0..=(4 - m) {
                let Ok(entry) = pade_of_amplitude(&amp, m, n) else { continue };
                let got = agreement_order(entry.value(), &amp.maclaurin(m + n));
                check(got == Some(m + n), || {
                    format!(
                        "{} [{m}|{n}] agrees through {got:?}, expected {}",
                        amp.name(),
                        m + n
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn pade_defect_orders() -> CheckResult {
    let expected = [
        (Amplitude::Euler, 2, 1, 3),
        (Amplitude::Euler, 4, 1, 5),
        (Amplitude::Bernoulli, 3, 1, 4),
    ];
    for (amp, m, n, order) in expected {
        match pade_of_amplitude(&amp, m, n) {
            Err(Error::PadeDefect { order: got }) => check(got == order, || {
                format!("{} [{m}|{n}] defect at order {got}, expected {order}", amp.name())
            })?,
            other => {
                return Err(format!(
                    "{} [{m}|{n}] expected a defect, got {other:?}",
                    amp.name()
                ))
            }
        }
    }
    // The (2,1) Bernoulli system is solvable but collapses to [2|0].
    let entry = pade_of_amplitude(&Amplitude::Bernoulli, 2, 1).map_err(|e| e.to_string())?;
    check(entry.value().denom().degree() == 0, || {
        "bernoulli [2|1] should collapse to a degree-0 denominator".into()
    })
}

fn pade_numerator_only_is_truncation() -> CheckResult {
    for m in 0..=4 {
        let entry = pade_of_amplitude(&Amplitude::ExpNeg, m, 0).map_err(|e| e.to_string())?;
        let series = Amplitude::ExpNeg.maclaurin(m);
        check(entry.value().denom().degree() == 0, || {
            format!("[{m}|0] denominator is not constant")
        })?;
        for k in 0..=m {
            check(entry.value().numer().coefficient(k) == series.coefficient(k), || {
                format!("[{m}|0] coefficient {k} differs from the Maclaurin truncation")
            })?;
        }
    }
    Ok(())
}

fn pade_rational_fixed_point() -> CheckResult {
    let y = Rational::new(3, 5);
    let exact = RationalFunction::new(
        Poly::one(Var::T),
        Poly::new(Var::T, vec![Rational::one(), -y.clone()]),
    )
    .expect("unit constant");
    for (m, n) in [(1, 1), (2, 1), (3, 2)] {
        let entry = pade_of_amplitude(&Amplitude::TruncExp { y: y.clone() }, m, n)
            .map_err(|e| e.to_string())?;
        check(entry.value() == &exact, || {
            format!("[{m}|{n}] of a rational amplitude should reproduce it exactly")
        })?;
    }
    Ok(())
}

fn pade_even_amplitude_inner_route() -> CheckResult {
    let entry =
        pade_of_amplitude(&Amplitude::ExpNegHalfSquare, 3, 2).map_err(|e| e.to_string())?;
    let got = agreement_order(entry.value(), &Amplitude::ExpNegHalfSquare.maclaurin(11));
    check(got == Some(11), || {
        format!("even [3|2] entry agrees through {got:?}, expected 11")
    })
}

fn operator_weights_invert_the_denominator() -> CheckResult {
    // Applying 1/D then D must give back the argument while both operator
    // expansions stay finite on polynomials.
    let denom = Poly::new(Var::Dx, vec![Rational::one(), Rational::new(1, 12)]);
    let inverse = DiffOperator::new(
        RationalFunction::new(Poly::one(Var::Dx), denom.clone()).expect("unit constant"),
    );
    let forward = DiffOperator::new(RationalFunction::from_poly(denom));
    let f = Poly::monomial(Var::X, Rational::one(), 3);
    let image = inverse.apply(&f);
    let expected = Poly::new(
        Var::X,
        vec![
            Rational::new(-1, 288),
            Rational::new(1, 24),
            Rational::new(-1, 4),
            Rational::one(),
        ],
    );
    check(image == expected, || format!("1/(1+∂/12){{x³}} came out as {image}"))?;
    check(forward.apply(&image) == f, || "applying D did not undo 1/D".into())
}

fn float_conversion_correctly_rounded() -> CheckResult {
    let cases: [(&str, f64); 6] = [
        ("1/3", 1.0 / 3.0),
        ("2/3", 2.0 / 3.0),
        ("1/10", 0.1),
        ("-691/2730", -691.0 / 2730.0),
        ("1/480", 1.0 / 480.0),
        ("123456789/65536", 123456789.0 / 65536.0),
    ];
    for (text, expected) in cases {
        let r: Rational = text.parse().expect("valid literal");
        let got = r.to_f64();
        check(got == expected, || {
            format!("{text} converts to {got:e}, expected {expected:e}")
        })?;
    }
    Ok(())
}

fn csv_emission_deterministic() -> CheckResult {
    let g = GridSpec::new(0.0, 4.0, 21).map_err(|e| e.to_string())?;
    let a = figure_csv(FigureId::F1a, Some(&g)).map_err(|e| e.to_string())?;
    let b = figure_csv(FigureId::F1a, Some(&g)).map_err(|e| e.to_string())?;
    check(a == b, || "two identical figure invocations differ".into())
}

// ---- theorems suite --------------------------------------------------------

fn theorem_routes_agree() -> CheckResult {
    for id in TheoremId::ALL {
        for n in 0..=12 {
            let closed = closed_form(id, n);
            let operator = operator_route(id, n);
            check(closed == operator, || {
                format!("{} differs between routes at n = {n}", id.name())
            })?;
        }
    }
    Ok(())
}

fn theorem_quoted_values() -> CheckResult {
    let cases: [(TheoremId, usize, &[&str]); 4] = [
        (TheoremId::Hermite1Pade11, 2, &["1", "-2", "1"]),
        (TheoremId::HePade11, 4, &["3", "0", "-6", "0", "1"]),
        (TheoremId::HePade02, 3, &["0", "-3", "0", "1"]),
        (TheoremId::EulerPade21, 2, &["0", "-1", "1"]),
    ];
    for (id, n, coeffs) in cases {
        let expected = Poly::new(
            Var::X,
            coeffs.iter().map(|s| s.parse().expect("valid literal")).collect(),
        );
        let got = closed_form(id, n);
        check(got == expected, || {
            format!("{} at n = {n} came out as {got}", id.name())
        })?;
    }
    Ok(())
}

/// For every catalog amplitude and total order m+n ≤ `max_total`, the
/// approximated polynomial must equal the exact member exactly when the index
/// sits within the entry's series agreement, and differ just past it.
/// Defective entries are skipped; they are covered by the defect checks.
pub fn exactness_order_sweep(max_total: usize, max_index: usize) -> Result<(), String> {
    for family in catalog() {
        let amp = family.catalog_amplitude().expect("catalog families have amplitudes");
        for m in 0..=max_total {
            for n in 0..=(max_total - m) {
                let Ok(entry) = pade_of_amplitude(&amp, m, n) else { continue };
                let agree = agreement_order(entry.value(), &amp.maclaurin(max_index))
                    .expect("constant terms always agree");
                for index in 0..=max_index {
                    let image = pade_appell(&family, m, n, index).map_err(|e| e.to_string())?;
                    let exact = image.matches_exact().map_err(|e| e.to_string())?;
                    let expected = index <= agree;
                    check(exact == expected, || {
                        format!(
                            "{} [{m}|{n}] at index {index}: exact = {exact}, \
                             agreement order {agree}",
                            family.name()
                        )
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn theorem_exactness_order() -> CheckResult {
    exactness_order_sweep(5, 12)?;
    // The showcase entries: both indices sit inside their agreement orders.
    let he11 = pade_appell(&Family::He, 3, 2, 11).map_err(|e| e.to_string())?;
    check(he11.matches_exact().map_err(|e| e.to_string())?, || {
        "[3|2] image of index 11 should be exact".into()
    })?;
    let he4 = pade_appell(&Family::He, 1, 1, 4).map_err(|e| e.to_string())?;
    check(he4.matches_exact().map_err(|e| e.to_string())?, || {
        "[1|1] image of index 4 should be exact".into()
    })
}

// ---- odes suite ------------------------------------------------------------

fn ode_trunc_exp_second_order() -> CheckResult {
    for n in 0..=10 {
        let r = ode_residual(&OdeId::TruncExpSecondOrder, n);
        check(r.is_zero(), || format!("second-order residual at n = {n}: {r}"))?;
    }
    Ok(())
}

fn ode_hermite_image_third_order() -> CheckResult {
    for n in 0..=10 {
        let r = ode_residual(&OdeId::HermitePade11ThirdOrder, n);
        check(r.is_zero(), || format!("third-order residual at n = {n}: {r}"))?;
    }
    Ok(())
}

fn ode_trunc_exp2_third_order() -> CheckResult {
    for y in ["1", "1/3", "-1/4"] {
        let y: Rational = y.parse().expect("valid literal");
        for n in 0..=10 {
            let r = ode_residual(&OdeId::TruncExp2ThirdOrder { y: y.clone() }, n);
            check(r.is_zero(), || {
                format!("third-order residual at n = {n}, y = {y}: {r}")
            })?;
        }
    }
    Ok(())
}

// ---- monomiality suite -----------------------------------------------------

fn xn(n: usize) -> Poly {
    Poly::monomial(Var::X, Rational::one(), n)
}

fn ladder_for(op: &DiffOperator, label: &str) -> CheckResult {
    let ladder = Monomiality::new(op).map_err(|e| e.to_string())?;
    for n in 0..=10 {
        let a_n = op.apply(&xn(n));
        let a_next = op.apply(&xn(n + 1));
        check(ladder.raise(&a_n) == a_next, || {
            format!("{label}: raising a_{n} missed a_{}", n + 1)
        })?;
        check(ladder.lower(&a_next) == a_next.derivative(), || {
            format!("{label}: lowering a_{} is not the derivative", n + 1)
        })?;
        let lowered_then_counted = ladder.raise(&ladder.lower(&a_n));
        check(lowered_then_counted == a_n.scale(&Rational::int(n as i64)), || {
            format!("{label}: M·P failed to count the index at n = {n}")
        })?;
    }
    Ok(())
}

fn monomiality_trunc_exp_ladder() -> CheckResult {
    let op = exact_rational_operator(&Family::TruncExp { y: Rational::one() })
        .expect("rational amplitude");
    ladder_for(&op, "trunc_exp")
}

fn monomiality_hermite_image_ladder() -> CheckResult {
    let entry = pade_of_amplitude(&Amplitude::ExpNeg, 1, 1).map_err(|e| e.to_string())?;
    let op = DiffOperator::from_table_entry(&entry);
    let ladder = Monomiality::new(&op).map_err(|e| e.to_string())?;
    // A′/A for (1−v/2)/(1+v/2) is −1/(1−v²/4).
    let expected = RationalFunction::new(
        Poly::constant(Var::Dx, Rational::int(-1)),
        Poly::new(Var::Dx, vec![Rational::one(), Rational::zero(), Rational::new(-1, 4)]),
    )
    .expect("unit constant");
    check(ladder.log_derivative().value() == &expected, || {
        "[1|1] logarithmic derivative has the wrong closed form".into()
    })?;
    ladder_for(&op, "hermite image")
}

fn monomiality_index_identity() -> CheckResult {
    let operators: Vec<(&str, DiffOperator)> = vec![
        ("identity", DiffOperator::identity()),
        (
            "hermite [1|1]",
            DiffOperator::from_table_entry(
                &pade_of_amplitude(&Amplitude::ExpNeg, 1, 1).map_err(|e| e.to_string())?,
            ),
        ),
        (
            "trunc_exp exact",
            exact_rational_operator(&Family::TruncExp { y: Rational::one() })
                .expect("rational amplitude"),
        ),
        (
            "euler [0|2]",
            DiffOperator::from_table_entry(
                &pade_of_amplitude(&Amplitude::Euler, 0, 2).map_err(|e| e.to_string())?,
            ),
        ),
        (
            "half-square [3|2]",
            DiffOperator::from_table_entry(
                &pade_of_amplitude(&Amplitude::ExpNegHalfSquare, 3, 2)
                    .map_err(|e| e.to_string())?,
            ),
        ),
        ("euler quoted [2|1]", DiffOperator::new(euler_21_quoted().retag(Var::Dx))),
    ];
    for (label, op) in &operators {
        for n in 0..=8 {
            let r = monomiality_consistency_residual(op, n);
            check(r.is_zero(), || {
                format!("index identity fails for {label} at n = {n}: {r}")
            })?;
        }
    }
    Ok(())
}

// ---- structural suite ------------------------------------------------------

fn structural_y_recurrence() -> CheckResult {
    for n in 0..=10 {
        check(y_recurrence_residual(n).is_zero(), || {
            format!("y-recurrence residual nonzero at n = {n}")
        })?;
    }
    Ok(())
}

fn structural_scaling_identity() -> CheckResult {
    for family in [
        Family::Hermite1 { y: Rational::zero() },
        Family::TruncExp { y: Rational::zero() },
    ] {
        for n in 0..=10 {
            let r = euler_scaling_residual(&family, n).map_err(|e| e.to_string())?;
            check(r.is_zero(), || {
                format!("scaling residual nonzero for {} at n = {n}", family.name())
            })?;
        }
    }
    Ok(())
}

fn structural_parameter_flow() -> CheckResult {
    for y in ["1/2", "1", "2"] {
        let y: Rational = y.parse().expect("valid literal");
        for n in 0..=8 {
            let r = flow_residual(&Family::TruncExp { y: y.clone() }, n)
                .map_err(|e| e.to_string())?;
            check(r.is_zero(), || {
                format!("flow residual nonzero for trunc_exp at n = {n}, y = {y}")
            })?;
        }
    }
    for n in 0..=8 {
        let r = flow_residual(&Family::Hermite1 { y: Rational::new(1, 4) }, n)
            .map_err(|e| e.to_string())?;
        check(r.is_zero(), || format!("flow residual nonzero for hermite1 at n = {n}"))?;
    }
    Ok(())
}

fn structural_generating_routes() -> CheckResult {
    let families = [
        Family::Hermite1 { y: Rational::int(-1) },
        Family::Hermite1 { y: Rational::new(2, 3) },
        Family::He,
        Family::Hermite2 { y: Rational::one() },
        Family::TruncExp { y: Rational::new(3, 5) },
        Family::TruncExp2 { y: Rational::int(2) },
        Family::Euler,
        Family::Bernoulli,
    ];
    for family in families {
        let ok = family.generating_check(8).map_err(|e| e.to_string())?;
        check(ok, || format!("{} series route disagrees with the sums", family.name()))?;
    }
    Ok(())
}

fn structural_derivative_recurrence() -> CheckResult {
    let families = [
        Family::Hermite1 { y: Rational::new(2, 3) },
        Family::Hermite2 { y: Rational::one() },
        Family::He,
        Family::TruncExp { y: Rational::new(3, 5) },
        Family::TruncExp2 { y: Rational::int(2) },
        Family::Euler,
        Family::Bernoulli,
    ];
    for family in families {
        for n in 1..=10 {
            let lhs = family.exact_polynomial(n).map_err(|e| e.to_string())?.derivative();
            let rhs = family
                .exact_polynomial(n - 1)
                .map_err(|e| e.to_string())?
                .scale(&Rational::int(n as i64));
            check(lhs == rhs, || {
                format!("derivative recurrence fails for {} at n = {n}", family.name())
            })?;
        }
    }
    Ok(())
}

// ---- umbral suite ----------------------------------------------------------

fn umbral_moment_projections() -> CheckResult {
    for n in 0..=3 {
        let got = umbral_pade_bernoulli(1, 1, n).map_err(|e| e.to_string())?;
        let exact = Family::Bernoulli.exact_polynomial(n).map_err(|e| e.to_string())?;
        check(got == exact, || format!("degree-{n} projection is not the exact member"))?;
    }
    let got = umbral_pade_bernoulli(1, 1, 4).map_err(|e| e.to_string())?;
    let exact = Family::Bernoulli.exact_polynomial(4).map_err(|e| e.to_string())?;
    let gap = &got - &exact;
    check(gap == Poly::constant(Var::X, Rational::new(-1, 15)), || {
        format!("degree-4 gap should be the constant -1/15, got {gap}")
    })
}

fn umbral_euler_routes() -> CheckResult {
    let direct = umbral_euler_02(3, &Rational::new(1, 2), &Rational::new(1, 4));
    let exact = Family::Euler.exact_polynomial(3).map_err(|e| e.to_string())?;
    let gap = &direct - &exact;
    check(gap == Poly::constant(Var::X, Rational::new(1, 2)), || {
        format!("[0|2] degree-3 gap should be 1/2, got {gap}")
    })?;
    for n in 0..=8 {
        check(umbral_euler_12(n) == closed_form(TheoremId::EulerPade12, n), || {
            format!("[1|2] umbral route differs from the closed form at n = {n}")
        })?;
    }
    check(
        umbral_euler_12(3) == exact,
        || "[1|2] projection at degree 3 should equal the exact member".into(),
    )
}

fn umbral_bernoulli_routes() -> CheckResult {
    for n in 0..=8 {
        let closed = umbral_bernoulli_closed_form(n);
        let expanded = umbral_pade_bernoulli(1, 1, n).map_err(|e| e.to_string())?;
        check(closed == expanded, || {
            format!("closed form and expansion differ at n = {n}")
        })?;
    }
    let via_21 = umbral_pade_bernoulli(2, 1, 3).map_err(|e| e.to_string())?;
    let exact = Family::Bernoulli.exact_polynomial(3).map_err(|e| e.to_string())?;
    check(via_21 == exact, || "(2,1) projection at degree 3 should be exact".into())?;
    let second = bernoulli_order2(4, &Rational::one());
    let expected = Poly::new(
        Var::X,
        vec![
            Rational::int(2),
            Rational::zero(),
            Rational::int(-6),
            Rational::zero(),
            Rational::one(),
        ],
    );
    check(second == expected, || format!("order-2 value at n = 4 came out as {second}"))
}

fn umbral_chebyshev_consistency() -> CheckResult {
    for r in 0..=6 {
        let m = MomentFunctional::Chebyshev {
            a: Rational::new(1, 2),
            b: Rational::new(1, 4),
        }
        .moment(r);
        check(m == chebyshev_u(r, &Rational::new(1, 2), &Rational::new(1, 4)), || {
            format!("moment {r} disagrees with the recurrence")
        })?;
    }
    for r in 0..=4 {
        check(
            MomentFunctional::Bernoulli.moment(r) == bernoulli_number(r),
            || format!("Bernoulli moment {r} disagrees with the recurrence"),
        )?;
    }
    Ok(())
}

fn bessel_series_window() -> CheckResult {
    for k in 2..=4 {
        let approx = bessel_pade_series(k, k + 2);
        let exact = j0_maclaurin(k + 2);
        for r in 0..=k {
            check(approx.coefficient(2 * r) == exact.coefficient(2 * r), || {
                format!("order-{k} series differs from J₀ at x^{}", 2 * r)
            })?;
        }
        check(
            approx.coefficient(2 * (k + 1)) != exact.coefficient(2 * (k + 1)),
            || format!("order-{k} series should leave the J₀ series at x^{}", 2 * (k + 1)),
        )?;
    }
    Ok(())
}

fn bessel_reference_values() -> CheckResult {
    let at_zero = reference_j0(0.0).map_err(|e| e.to_string())?;
    check(at_zero == 1.0, || format!("J₀(0) = {at_zero}"))?;
    let at_one = reference_j0(1.0).map_err(|e| e.to_string())?;
    check((at_one - 0.7651976865579666).abs() < 1e-12, || format!("J₀(1) = {at_one:e}"))?;
    let at_first_zero = reference_j0(2.404825557695773).map_err(|e| e.to_string())?;
    check(at_first_zero.abs() < 1e-9, || {
        format!("J₀ at its first zero = {at_first_zero:e}")
    })?;
    check(reference_j0(12.5).is_err(), || "window violation went unreported".into())
}

/// Sup errors of the [0|k] curves against the J₀ reference on [0,8] × 321 at
/// the documented 25-term truncation, frozen from an independent oracle run
/// (exact rational coefficients, scipy J₀ reference; this crate reproduces
/// the values to 1e−12). Note the [0|2] figure is dominated near x = 8 by
/// series truncation: the retained terms reach O(30) there, so the partial
/// sum sits ~5.7 away from J₀ while the limit function is within 0.30.
const BESSEL_SUP_WINDOWS: [(usize, f64, f64); 3] = [
    (2, 5.69, 5.72),
    (3, 0.389, 0.392),
    (4, 0.300, 0.303),
];

/// Same comparison with the series converged (60 terms, where another term
/// changes nothing at double precision) on [0,6] × 201, the window where the
/// limit functions themselves are still tracking J₀. Oracle values:
/// 0.2224, 0.1377, 0.0919. On the full [0,8] window the converged curves
/// have all decayed to ~0 while J₀ still oscillates at amplitude ~0.29, so
/// sup errors there tie at that amplitude instead of ordering strictly.
const BESSEL_CONVERGED_WINDOWS: [(usize, f64, f64); 3] = [
    (2, 0.220, 0.225),
    (3, 0.136, 0.139),
    (4, 0.090, 0.094),
];

fn sup_errors_against_j0(
    windows: &[(usize, f64, f64); 3],
    g: &GridSpec,
    terms: usize,
) -> Result<Vec<f64>, String> {
    let j0 = eval_grid(&Curve::BesselJ0, g).map_err(|e| e.to_string())?;
    let mut sups = Vec::new();
    for &(k, lo, hi) in windows {
        let curve = Curve::from_series(&bessel_pade_series(k, terms));
        let pts = eval_grid(&curve, g).map_err(|e| e.to_string())?;
        let e = sup_error(&j0, &pts).map_err(|e| e.to_string())?;
        check(e > lo && e < hi, || {
            format!("[0|{k}] sup error {e:e} outside frozen window ({lo:e}, {hi:e})")
        })?;
        sups.push(e);
    }
    check(sups[2] < sups[1] && sups[1] < sups[0], || {
        format!("sup errors not strictly improving: {sups:?}")
    })?;
    Ok(sups)
}

fn bessel_sup_error_ordering() -> CheckResult {
    let g = GridSpec::new(0.0, 8.0, 321).map_err(|e| e.to_string())?;
    sup_errors_against_j0(&BESSEL_SUP_WINDOWS, &g, BESSEL_FIGURE_TERMS)?;
    Ok(())
}

fn bessel_converged_tracking() -> CheckResult {
    let g = GridSpec::new(0.0, 6.0, 201).map_err(|e| e.to_string())?;
    sup_errors_against_j0(&BESSEL_CONVERGED_WINDOWS, &g, 60)?;
    Ok(())
}

// ---- runner ----------------------------------------------------------------

struct CheckDef {
    name: &'static str,
    suite: Suite,
    run: fn() -> CheckResult,
}

fn checks() -> Vec<CheckDef> {
    macro_rules! def {
        ($suite:expr, $f:ident) => {
            CheckDef { name: stringify!($f), suite: $suite, run: $f }
        };
    }
    vec![
        def!(Suite::Pade, pade_normalization),
        def!(Suite::Pade, pade_agreement_order),
        def!(Suite::Pade, pade_defect_orders),
        def!(Suite::Pade, pade_numerator_only_is_truncation),
        def!(Suite::Pade, pade_rational_fixed_point),
        def!(Suite::Pade, pade_even_amplitude_inner_route),
        def!(Suite::Pade, operator_weights_invert_the_denominator),
        def!(Suite::Pade, float_conversion_correctly_rounded),
        def!(Suite::Pade, csv_emission_deterministic),
        def!(Suite::Theorems, theorem_routes_agree),
        def!(Suite::Theorems, theorem_quoted_values),
        def!(Suite::Theorems, theorem_exactness_order),
        def!(Suite::Odes, ode_trunc_exp_second_order),
        def!(Suite::Odes, ode_hermite_image_third_order),
        def!(Suite::Odes, ode_trunc_exp2_third_order),
        def!(Suite::Monomiality, monomiality_trunc_exp_ladder),
        def!(Suite::Monomiality, monomiality_hermite_image_ladder),
        def!(Suite::Monomiality, monomiality_index_identity),
        def!(Suite::Structural, structural_y_recurrence),
        def!(Suite::Structural, structural_scaling_identity),
        def!(Suite::Structural, structural_parameter_flow),
        def!(Suite::Structural, structural_generating_routes),
        def!(Suite::Structural, structural_derivative_recurrence),
        def!(Suite::Umbral, umbral_moment_projections),
        def!(Suite::Umbral, umbral_euler_routes),
        def!(Suite::Umbral, umbral_bernoulli_routes),
        def!(Suite::Umbral, umbral_chebyshev_consistency),
        def!(Suite::Umbral, bessel_series_window),
        def!(Suite::Umbral, bessel_reference_values),
        def!(Suite::Umbral, bessel_sup_error_ordering),
        def!(Suite::Umbral, bessel_converged_tracking),
    ]
}

/// Runs one suite, or every suite when `filter` is `None`, in declaration
/// order. Reports never panic on failure; they carry the failure text.
pub fn run_suite(filter: Option<Suite>) -> Vec<CheckReport> {
    checks()
        .into_iter()
        .filter(|c| filter.is_none_or(|s| s == c.suite))
        .map(|c| CheckReport { name: c.name, suite: c.suite, error: (c.run)().err() })
        .collect()
}
