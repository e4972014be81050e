//! Exact Padé approximants of catalog amplitudes.
//!
//! The [m|n] entry is P/Q with deg P ≤ m, deg Q ≤ n, Q(0) = 1 and
//! P/Q − ΣcᵣtʳΣ = O(t^(m+n+1)). Matching powers m+1..m+n of t gives a linear
//! system for the denominator; the numerator then falls out by convolution.
//! The system is solved over the integers with fraction-free elimination so
//! a vanishing pivot is an exact statement, never a rounding artifact.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::amplitude::Amplitude;
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::Rational;
use crate::ratfunc::RationalFunction;
use crate::series::PowerSeries;

/// A solved Padé table entry. For even amplitudes, `m` and `n` count powers
/// of the inner variable u, and `value` is already rewritten in t (with
/// doubled degrees).
#[derive(Clone, PartialEq, Debug)]
pub struct PadeApproximant {
    m: usize,
    n: usize,
    value: RationalFunction,
}

impl PadeApproximant {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> &RationalFunction {
        &self.value
    }

    pub fn into_value(self) -> RationalFunction {
        self.value
    }
}

/// One processed equation, scaled to integers: coefficients over the
/// unknowns b_1..b_n plus the right-hand side.
struct EchelonRow {
    lead: usize,
    coeffs: Vec<BigInt>,
    rhs: BigInt,
}

fn to_integer_row(row: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut lcm = BigInt::one();
    for r in row {
        lcm = lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let (coeffs, rhs) = ints.split_at(row.len() - 1);
    (coeffs.to_vec(), rhs[0].clone())
}

fn normalize_content(coeffs: &mut [BigInt], rhs: &mut BigInt) {
    let mut g = rhs.abs();
    for c in coeffs.iter() {
        g = g.gcd(c);
    }
    if g > BigInt::one() {
        for c in coeffs.iter_mut() {
            *c = &*c / &g;
        }
        *rhs = &*rhs / &g;
    }
}

/// Solves the [m|n] entry for the series c. `c` must reach order m+n.
///
/// Consistent but underdetermined systems take the minimal solution (free
/// unknowns zero); an inconsistent equation reports the defective order.
pub fn solve_pade(c: &PowerSeries, m: usize, n: usize) -> Result<PadeApproximant> {
    assert!(c.order() >= m + n, "series must be known through order m+n");

    // Forward elimination, one matching equation at a time in ascending
    // order of t-power, so the first unsatisfiable order is well defined.
    let mut echelon: Vec<EchelonRow> = Vec::new();
    for k in (m + 1)..=(m + n) {
        let mut row: Vec<Rational> = (1..=n)
            .map(|j| if k >= j { c.coefficient(k - j) } else { Rational::zero() })
            .collect();
        row.push(-c.coefficient(k));
        let (mut coeffs, mut rhs) = to_integer_row(&row);

        // Echelon rows are sorted by lead column; each reduction only
        // touches columns at or after that lead, so one ascending pass
        // fully reduces the new row.
        for e in &echelon {
            let factor = coeffs[e.lead].clone();
            if factor.is_zero() {
                continue;
            }
            let pivot = e.coeffs[e.lead].clone();
            for (c_new, c_e) in coeffs.iter_mut().zip(&e.coeffs) {
                *c_new = &*c_new * &pivot - c_e * &factor;
            }
            rhs = &rhs * &pivot - &e.rhs * &factor;
            normalize_content(&mut coeffs, &mut rhs);
        }

        match coeffs.iter().position(|c| !c.is_zero()) {
            Some(lead) => {
                let pos = echelon.partition_point(|e| e.lead < lead);
                echelon.insert(pos, EchelonRow { lead, coeffs, rhs });
            }
            None if rhs.is_zero() => continue, // dependent equation
            None => return Err(Error::PadeDefect { order: k }),
        }
    }

    // Back substitution, free unknowns pinned to zero.
    let mut b = vec![Rational::zero(); n + 1];
    b[0] = Rational::one();
    for e in echelon.iter().rev() {
        let mut acc = Rational::from_big(e.rhs.clone(), BigInt::one());
        for j in (e.lead + 1)..n {
            if !e.coeffs[j].is_zero() {
                acc = acc - Rational::from_big(e.coeffs[j].clone(), BigInt::one()) * &b[j + 1];
            }
        }
        b[e.lead + 1] = acc / Rational::from_big(e.coeffs[e.lead].clone(), BigInt::one());
    }

    let a: Vec<Rational> = (0..=m)
        .map(|k| (0..=k.min(n)).map(|j| &b[j] * c.coefficient(k - j)).sum())
        .collect();

    let numer = Poly::new(Var::T, a);
    let denom = Poly::new(Var::T, b);
    let value = RationalFunction::new(numer, denom).expect("Q(0) = 1");
    Ok(PadeApproximant { m, n, value })
}

/// Padé entry of a catalog amplitude. Even amplitudes (functions of t²) are
/// solved in the inner variable u with the e^(−u) series and the result is
/// substituted back, which both preserves exactness and doubles the
/// agreement window in t.
pub fn pade_of_amplitude(a: &Amplitude, m: usize, n: usize) -> Result<PadeApproximant> {
    let inner_scale = match a {
        Amplitude::ExpNegHalfSquare => Some(Rational::new(1, 2)),
        Amplitude::Hermite2 { y } => Some(-y),
        _ => None,
    };
    match inner_scale {
        Some(scale) => {
            let inner = Amplitude::ExpNeg.maclaurin(m + n);
            let solved = solve_pade(&inner, m, n)?;
            let numer = solved.value.numer().substitute_power(&scale, 2);
            let denom = solved.value.denom().substitute_power(&scale, 2);
            let value = RationalFunction::new(numer, denom).expect("constant term stays 1");
            Ok(PadeApproximant { m, n, value })
        }
        None => solve_pade(&a.maclaurin(m + n), m, n),
    }
}

/// Largest k with the expansion of `f` matching `c` through tᵏ, up to
/// c's truncation order. `None` when even the constant terms differ.
pub fn agreement_order(f: &RationalFunction, c: &PowerSeries) -> Option<usize> {
    let expansion = f.expansion(c.order());
    let mut last = None;
    for k in 0..=c.order() {
        if expansion.coefficient(k) == c.coefficient(k) {
            last = Some(k);
        } else {
            break;
        }
    }
    last
}

/// The [2|1]-shaped Euler-amplitude operator in its widely quoted
/// normalized form, (1 − 5t/12 − t²/24)/(1 + t/12).
///
/// This is not a Padé table entry: the defining system for (2, 1) is
/// singular at order 3, and this ratio agrees with the amplitude only
/// through t². It is kept verbatim because the third-order Euler closed
/// form is built from it.
pub fn euler_21_quoted() -> RationalFunction {
    let numer = Poly::new(
        Var::T,
        vec![Rational::one(), Rational::new(-5, 12), Rational::new(-1, 24)],
    );
    let denom = Poly::new(Var::T, vec![Rational::one(), Rational::new(1, 12)]);
    RationalFunction::new(numer, denom).expect("constant term 1")
}

/// The [1|2] Euler-amplitude entry built structurally: substitute the [2|1]
/// entry of eᵗ into 2/(eᵗ + 1) and renormalize. Agrees with the direct
/// solve of the amplitude series.
pub fn euler_pade_12() -> RationalFunction {
    // [2|1] of e^t: (1 + 2t/3 + t²/6)/(1 − t/3).
    let exp_series = PowerSeries::new(
        (0..=3).map(|r| Rational::factorial(r).recip()).collect(),
    );
    let exp_21 = solve_pade(&exp_series, 2, 1).expect("exponential table has no defects");
    // 2/(P/Q + 1) = 2Q/(P + Q).
    let numer = exp_21.value.denom().scale(&Rational::int(2));
    let denom = exp_21.value.numer() + exp_21.value.denom();
    RationalFunction::new(numer, denom).expect("P(0) + Q(0) = 2")
}
