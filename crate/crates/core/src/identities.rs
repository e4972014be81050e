//! Closed-form identities and differential equations satisfied by the
//! Padé-approximated families, each verified against an independent route.
//!
//! Every closed form here rewrites an [m|n] operator image in terms of
//! reference families (truncated exponentials, Chebyshev-type numbers,
//! umbral projections). `closed_form` evaluates the rewritten side;
//! `operator_route` evaluates the operator side; equality is the theorem.

use crate::error::{Error, Result};
use crate::families::{chebyshev_u, Family};
use crate::operator::{exact_rational_operator, pade_appell, DiffOperator};
use crate::pade::euler_21_quoted;
use crate::poly::{Poly, Var};
use crate::rational::Rational;
use crate::umbral::{umbral_bernoulli_closed_form, umbral_euler_12, umbral_pade_bernoulli};

/// The closed-form identities, named by the family and the [m|n] entry they
/// describe. `EulerPade21` uses the quoted (2,1)-shaped Euler ratio, since
/// that table entry is defective and has no solver-produced value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremId {
    Hermite1Pade11,
    Hermite1Pade21,
    HePade11,
    HePade02,
    HePade32,
    EulerPade02,
    EulerPade21,
    EulerPade12,
    BernoulliPade11,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Hermite1Pade11,
        TheoremId::Hermite1Pade21,
        TheoremId::HePade11,
        TheoremId::HePade02,
        TheoremId::HePade32,
        TheoremId::EulerPade02,
        TheoremId::EulerPade21,
        TheoremId::EulerPade12,
        TheoremId::BernoulliPade11,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::Hermite1Pade11 => "hermite1_pade_1_1",
            TheoremId::Hermite1Pade21 => "hermite1_pade_2_1",
            TheoremId::HePade11 => "he_pade_1_1",
            TheoremId::HePade02 => "he_pade_0_2",
            TheoremId::HePade32 => "he_pade_3_2",
            TheoremId::EulerPade02 => "euler_pade_0_2",
            TheoremId::EulerPade21 => "euler_pade_2_1",
            TheoremId::EulerPade12 => "euler_pade_1_2",
            TheoremId::BernoulliPade11 => "bernoulli_pade_1_1",
        }
    }
}

fn trunc_exp(n: usize, y: &Rational) -> Poly {
    Family::TruncExp { y: y.clone() }.exact_polynomial(n).expect("supported family")
}

fn trunc_exp2(n: usize, y: &Rational) -> Poly {
    Family::TruncExp2 { y: y.clone() }.exact_polynomial(n).expect("supported family")
}

/// Σ_r n!/(n−2r)! · U_r(a,b) · x^(n−2r): a denominator 1+a∂x²+b∂x⁴ applied
/// to xⁿ, written through Chebyshev-type numbers.
fn chebyshev_gauss(n: usize, a: &Rational, b: &Rational) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for r in 0..=(n / 2) {
        coeffs[n - 2 * r] = Rational::falling(n, 2 * r) * chebyshev_u(r, a, b);
    }
    Poly::new(Var::X, coeffs)
}

/// Σ_r n!/(n−r)! · U_r(a,b) · x^(n−r): same with a linear-argument
/// denominator 1+a∂x+b∂x².
fn chebyshev_linear(n: usize, a: &Rational, b: &Rational) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for r in 0..=n {
        coeffs[n - r] = Rational::falling(n, r) * chebyshev_u(r, a, b);
    }
    Poly::new(Var::X, coeffs)
}

/// Evaluates the identity's closed-form side.
pub fn closed_form(id: TheoremId, n: usize) -> Poly {
    let ni = n as i64;
    match id {
        TheoremId::Hermite1Pade11 => {
            let y = Rational::new(-1, 2);
            let mut p = trunc_exp(n, &y);
            if n >= 1 {
                p = p - trunc_exp(n - 1, &y).scale(&Rational::new(ni, 2));
            }
            p
        }
        TheoremId::Hermite1Pade21 => {
            let y = Rational::new(-1, 3);
            let mut p = trunc_exp(n, &y);
            if n >= 1 {
                p = p - trunc_exp(n - 1, &y).scale(&Rational::new(2 * ni, 3));
            }
            if n >= 2 {
                p = p + trunc_exp(n - 2, &y).scale(&(Rational::falling(n, 2) / Rational::int(6)));
            }
            p
        }
        TheoremId::HePade11 => {
            let y = Rational::new(-1, 4);
            let mut p = trunc_exp2(n, &y);
            if n >= 2 {
                p = p - trunc_exp2(n - 2, &y).scale(&(Rational::falling(n, 2) / Rational::int(4)));
            }
            p
        }
        TheoremId::HePade02 => chebyshev_gauss(n, &Rational::new(1, 2), &Rational::new(1, 8)),
        TheoremId::HePade32 => {
            // dₖ is the family of the [3|2] denominator alone.
            let d = |k: usize| chebyshev_gauss(k, &Rational::new(1, 5), &Rational::new(1, 80));
            let numerator_terms: [(usize, Rational); 3] = [
                (2, Rational::new(-3, 10)),
                (4, Rational::new(3, 80)),
                (6, Rational::new(-1, 480)),
            ];
            let mut p = d(n);
            for (drop, c) in numerator_terms {
                if n >= drop {
                    p = p + d(n - drop).scale(&(Rational::falling(n, drop) * c));
                }
            }
            p
        }
        TheoremId::EulerPade02 => chebyshev_linear(n, &Rational::new(1, 2), &Rational::new(1, 4)),
        TheoremId::EulerPade21 => {
            let y = Rational::new(-1, 12);
            let mut p = trunc_exp(n, &y);
            if n >= 1 {
                p = p - trunc_exp(n - 1, &y).scale(&Rational::new(5 * ni, 12));
            }
            if n >= 2 {
                p = p - trunc_exp(n - 2, &y).scale(&(Rational::falling(n, 2) / Rational::int(24)));
            }
            p
        }
        TheoremId::EulerPade12 => umbral_euler_12(n),
        TheoremId::BernoulliPade11 => umbral_bernoulli_closed_form(n),
    }
}

/// Evaluates the identity's operator side: the [m|n] amplitude operator
/// applied to xⁿ (through the Padé solver, the quoted Euler ratio, or the
/// umbral expansion, depending on the entry).
pub fn operator_route(id: TheoremId, n: usize) -> Poly {
    let appell = |family: &Family, m: usize, den: usize| {
        pade_appell(family, m, den, n)
            .expect("table entry known to be solvable")
            .value()
            .clone()
    };
    match id {
        TheoremId::Hermite1Pade11 => appell(&Family::Hermite1 { y: Rational::int(-1) }, 1, 1),
        TheoremId::Hermite1Pade21 => appell(&Family::Hermite1 { y: Rational::int(-1) }, 2, 1),
        TheoremId::HePade11 => appell(&Family::He, 1, 1),
        TheoremId::HePade02 => appell(&Family::He, 0, 2),
        TheoremId::HePade32 => appell(&Family::He, 3, 2),
        TheoremId::EulerPade02 => appell(&Family::Euler, 0, 2),
        TheoremId::EulerPade21 => DiffOperator::new(euler_21_quoted().retag(Var::Dx))
            .apply(&Poly::monomial(Var::X, Rational::one(), n)),
        TheoremId::EulerPade12 => appell(&Family::Euler, 1, 2),
        TheoremId::BernoulliPade11 => {
            umbral_pade_bernoulli(1, 1, n).expect("exponential table has no defects")
        }
    }
}

/// Differential equations satisfied exactly by specific families.
#[derive(Clone, PartialEq, Debug)]
pub enum OdeId {
    /// x·e″ − (x+n)·e′ + n·e for e = eₙ(x,1).
    TruncExpSecondOrder,
    /// x·z‴ + (2−n)·z″ + 4(1−x)·z′ + 4n·z for the [1|1] image of (x−1)ⁿ.
    HermitePade11ThirdOrder,
    /// y·x·Z‴ − n·y·Z″ − x·Z′ + n·Z for Z = eₙ⁽²⁾(x,y).
    TruncExp2ThirdOrder { y: Rational },
}

fn x_poly() -> Poly {
    Poly::monomial(Var::X, Rational::one(), 1)
}

fn second_order_lhs(e: &Poly, n: usize) -> Poly {
    let d1 = e.derivative();
    let d2 = d1.derivative();
    let x_plus_n = Poly::new(Var::X, vec![Rational::int(n as i64), Rational::one()]);
    &x_poly() * &d2 - &x_plus_n * &d1 + e.scale(&Rational::int(n as i64))
}

fn third_order_lhs(z: &Poly, n: usize) -> Poly {
    let d1 = z.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let four_one_minus_x = Poly::new(Var::X, vec![Rational::int(4), Rational::int(-4)]);
    &x_poly() * &d3
        + d2.scale(&Rational::int(2 - n as i64))
        + &four_one_minus_x * &d1
        + z.scale(&Rational::int(4 * n as i64))
}

fn trunc_exp2_lhs(z: &Poly, n: usize, y: &Rational) -> Poly {
    let d1 = z.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    (&x_poly() * &d3).scale(y) - d2.scale(&(Rational::int(n as i64) * y))
        - &x_poly() * &d1
        + z.scale(&Rational::int(n as i64))
}

/// Left-hand side of the named equation at its own family member; the zero
/// polynomial certifies the identity.
pub fn ode_residual(id: &OdeId, n: usize) -> Poly {
    match id {
        OdeId::TruncExpSecondOrder => {
            second_order_lhs(&trunc_exp(n, &Rational::one()), n)
        }
        OdeId::HermitePade11ThirdOrder => {
            let z = pade_appell(&Family::Hermite1 { y: Rational::int(-1) }, 1, 1, n)
                .expect("entry (1,1) is solvable")
                .value()
                .clone();
            third_order_lhs(&z, n)
        }
        OdeId::TruncExp2ThirdOrder { y } => trunc_exp2_lhs(&trunc_exp2(n, y), n, y),
    }
}

/// Polynomial in y whose coefficients are polynomials in x. Used to state
/// parameter-derivative identities with y kept symbolic.
#[derive(Clone, PartialEq, Debug)]
pub struct YPoly {
    slots: Vec<Poly>,
}

impl YPoly {
    fn new(mut slots: Vec<Poly>) -> Self {
        while slots.last().is_some_and(|p| p.is_zero()) {
            slots.pop();
        }
        YPoly { slots }
    }

    pub fn zero() -> Self {
        YPoly { slots: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.slots.is_empty()
    }

    /// x-polynomial multiplying yʳ.
    pub fn slot(&self, r: usize) -> Poly {
        self.slots.get(r).cloned().unwrap_or_else(|| Poly::zero(Var::X))
    }

    pub fn eval_y(&self, y: &Rational) -> Poly {
        let mut result = Poly::zero(Var::X);
        let mut power = Rational::one();
        for (r, p) in self.slots.iter().enumerate() {
            if r > 0 {
                power = power * y;
            }
            result = result + p.scale(&power);
        }
        result
    }

    pub fn d_dy(&self) -> YPoly {
        let slots = self
            .slots
            .iter()
            .enumerate()
            .skip(1)
            .map(|(r, p)| p.scale(&Rational::int(r as i64)))
            .collect();
        YPoly::new(slots)
    }

    pub fn d_dx(&self) -> YPoly {
        YPoly::new(self.slots.iter().map(Poly::derivative).collect())
    }

    /// Multiplication by yᵏ.
    pub fn shift_y(&self, k: usize) -> YPoly {
        if self.slots.is_empty() {
            return YPoly::zero();
        }
        let mut slots = vec![Poly::zero(Var::X); k];
        slots.extend(self.slots.iter().cloned());
        YPoly::new(slots)
    }

    /// Multiplication of every slot by x.
    pub fn mul_x(&self) -> YPoly {
        let x = x_poly();
        YPoly::new(self.slots.iter().map(|p| &x * p).collect())
    }

    pub fn scale(&self, c: &Rational) -> YPoly {
        YPoly::new(self.slots.iter().map(|p| p.scale(c)).collect())
    }
}

impl std::ops::Add<&YPoly> for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let len = self.slots.len().max(rhs.slots.len());
        let slots = (0..len).map(|r| self.slot(r) + rhs.slot(r)).collect();
        YPoly::new(slots)
    }
}

impl std::ops::Sub<&YPoly> for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let len = self.slots.len().max(rhs.slots.len());
        let slots = (0..len).map(|r| self.slot(r) - rhs.slot(r)).collect();
        YPoly::new(slots)
    }
}

/// eₙ(x,y) with y symbolic: slot r holds n!/(n−r)!·x^(n−r).
pub fn trunc_exp_in_y(n: usize) -> YPoly {
    let slots = (0..=n)
        .map(|r| Poly::monomial(Var::X, Rational::falling(n, r), n - r))
        .collect();
    YPoly::new(slots)
}

/// (x+y)ⁿ with y symbolic: slot r holds C(n,r)·x^(n−r).
pub fn hermite1_in_y(n: usize) -> YPoly {
    let slots = (0..=n)
        .map(|r| Poly::monomial(Var::X, Rational::binomial(n, r), n - r))
        .collect();
    YPoly::new(slots)
}

/// Residual of ∂y eₙ(x,y) = Σ_{r<n} n!/(n−1−r)!·yʳ·eₙ₋₁₋ᵣ(x,y), y symbolic.
pub fn y_recurrence_residual(n: usize) -> YPoly {
    let lhs = trunc_exp_in_y(n).d_dy();
    let mut rhs = YPoly::zero();
    for r in 0..n {
        let term = trunc_exp_in_y(n - 1 - r)
            .shift_y(r)
            .scale(&Rational::falling(n, r + 1));
        rhs = &rhs + &term;
    }
    &lhs - &rhs
}

/// Residual of the scaling identity (y∂y + x∂x)aₙ = n·aₙ, y symbolic.
/// Supported for the families whose amplitude has the form A(yt).
pub fn euler_scaling_residual(family: &Family, n: usize) -> Result<YPoly> {
    let a = match family {
        Family::Hermite1 { .. } => hermite1_in_y(n),
        Family::TruncExp { .. } => trunc_exp_in_y(n),
        _ => {
            return Err(Error::Unsupported(format!(
                "scaling identity needs an A(yt) amplitude, not family {}",
                family.name()
            )))
        }
    };
    let lhs = &a.d_dy().shift_y(1) + &a.d_dx().mul_x();
    Ok(&lhs - &a.scale(&Rational::int(n as i64)))
}

/// Residual of the parameter flow ∂y aₙ = T(y)·∂x aₙ at a bound y, with
/// T(y) = A′(y∂x)/A(y∂x): the identity operator for the exponential
/// amplitude, 1/(1−y∂x) for the truncated exponential one.
pub fn flow_residual(family: &Family, n: usize) -> Result<Poly> {
    match family {
        Family::TruncExp { y } => {
            let dy = trunc_exp_in_y(n).d_dy().eval_y(y);
            let t_op = exact_rational_operator(family).expect("rational amplitude");
            let dx = Family::TruncExp { y: y.clone() }
                .exact_polynomial(n)?
                .derivative();
            Ok(dy - t_op.apply(&dx))
        }
        Family::Hermite1 { y } => {
            let dy = hermite1_in_y(n).d_dy().eval_y(y);
            let dx = family.exact_polynomial(n)?.derivative();
            Ok(dy - dx)
        }
        _ => Err(Error::Unsupported(format!(
            "flow identity needs an A(yt) amplitude, not family {}",
            family.name()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn xp(coeffs: &[&str]) -> Poly {
        Poly::new(Var::X, coeffs.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn quoted_closed_form_values() {
        assert_eq!(closed_form(TheoremId::Hermite1Pade11, 2), xp(&["1", "-2", "1"]));
        assert_eq!(closed_form(TheoremId::HePade11, 4), xp(&["3", "0", "-6", "0", "1"]));
        assert_eq!(closed_form(TheoremId::HePade02, 3), xp(&["0", "-3", "0", "1"]));
        assert_eq!(closed_form(TheoremId::EulerPade21, 2), xp(&["0", "-1", "1"]));
        assert_eq!(closed_form(TheoremId::EulerPade21, 3), xp(&["0", "0", "-3/2", "1"]));
        assert_eq!(closed_form(TheoremId::EulerPade02, 2), xp(&["0", "-1", "1"]));
    }

    #[test]
    fn closed_forms_match_operator_route() {
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
    }

    #[test]
    fn high_order_entry_reproduces_exact_hermite() {
        assert_eq!(
            closed_form(TheoremId::HePade32, 11),
            Family::He.exact_polynomial(11).unwrap()
        );
        assert_ne!(
            closed_form(TheoremId::HePade32, 12),
            Family::He.exact_polynomial(12).unwrap()
        );
    }

    #[test]
    fn ode_residuals_vanish() {
        for n in 0..=10 {
            assert!(
                ode_residual(&OdeId::TruncExpSecondOrder, n).is_zero(),
                "second-order at n = {n}"
            );
            assert!(
                ode_residual(&OdeId::HermitePade11ThirdOrder, n).is_zero(),
                "third-order at n = {n}"
            );
            for y in ["1", "1/3", "-1/4"] {
                assert!(
                    ode_residual(&OdeId::TruncExp2ThirdOrder { y: q(y) }, n).is_zero(),
                    "trunc_exp2 at n = {n}, y = {y}"
                );
            }
        }
    }

    #[test]
    fn ode_left_hand_sides_are_not_identically_zero() {
        // The equations must fail on a wrong polynomial, or the residual
        // checks above would be vacuous.
        assert_eq!(second_order_lhs(&xp(&["0", "0", "1"]), 2), xp(&["0", "-2"]));
        assert!(!third_order_lhs(&xp(&["0", "0", "1"]), 2).is_zero());
        assert!(!trunc_exp2_lhs(&xp(&["1", "0", "1"]), 2, &q("1")).is_zero());
    }

    #[test]
    fn symbolic_y_construction_evaluates_correctly() {
        assert_eq!(trunc_exp_in_y(2).eval_y(&q("1")), xp(&["2", "2", "1"]));
        assert_eq!(trunc_exp_in_y(2).d_dy().eval_y(&q("1")), xp(&["4", "2"]));
        assert_eq!(hermite1_in_y(3).eval_y(&q("-1")), xp(&["-1", "3", "-3", "1"]));
    }

    #[test]
    fn y_recurrence_holds_symbolically() {
        for n in 0..=10 {
            let r = y_recurrence_residual(n);
            assert!(r.is_zero(), "n = {n}, slot 0 = {}", r.slot(0));
        }
    }

    #[test]
    fn scaling_identity_holds_symbolically() {
        for n in 0..=10 {
            assert!(
                euler_scaling_residual(&Family::Hermite1 { y: q("0") }, n)
                    .unwrap()
                    .is_zero(),
                "hermite1 at n = {n}"
            );
            assert!(
                euler_scaling_residual(&Family::TruncExp { y: q("0") }, n)
                    .unwrap()
                    .is_zero(),
                "trunc_exp at n = {n}"
            );
        }
        assert!(euler_scaling_residual(&Family::Euler, 2).is_err());
    }

    #[test]
    fn flow_residual_vanishes_at_bound_parameters() {
        for y in ["1/2", "1", "2"] {
            for n in 0..=8 {
                let r = flow_residual(&Family::TruncExp { y: q(y) }, n).unwrap();
                assert!(r.is_zero(), "trunc_exp y = {y}, n = {n}: {r}");
            }
        }
        for n in 0..=8 {
            let r = flow_residual(&Family::Hermite1 { y: q("1/4") }, n).unwrap();
            assert!(r.is_zero(), "hermite1 n = {n}");
        }
        assert!(flow_residual(&Family::Bernoulli, 2).is_err());
    }
}
