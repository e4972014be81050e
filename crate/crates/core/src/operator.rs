//! Rational differential operators acting on polynomials.
//!
//! An amplitude A(t) becomes the operator A(∂x); applied to xⁿ it yields the
//! degree-n member of the associated Appell family. A rational operator
//! P(∂x)/Q(∂x) with Q(0) = 1 acts exactly: the denominator's inverse is a
//! power series in ∂x, and ∂x is nilpotent on any fixed polynomial, so the
//! expansion terminates. Nothing here is approximate.

use crate::error::{Error, Result};
use crate::families::Family;
use crate::pade::{pade_of_amplitude, PadeApproximant};
use crate::poly::{Poly, Var};
use crate::rational::Rational;
use crate::ratfunc::RationalFunction;
use crate::series::PowerSeries;

/// A rational function of ∂x, usable as an exact operator on x-polynomials.
#[derive(Clone, PartialEq, Debug)]
pub struct DiffOperator {
    value: RationalFunction,
}

impl DiffOperator {
    /// Wraps a rational function already tagged in ∂x.
    pub fn new(value: RationalFunction) -> Self {
        assert!(value.var() == Var::Dx, "operator must be a function of dx");
        DiffOperator { value }
    }

    /// Reinterprets a Padé table entry in t as an operator in ∂x.
    pub fn from_table_entry(entry: &PadeApproximant) -> Self {
        DiffOperator { value: entry.value().retag(Var::Dx) }
    }

    pub fn identity() -> Self {
        DiffOperator { value: RationalFunction::one(Var::Dx) }
    }

    pub fn value(&self) -> &RationalFunction {
        &self.value
    }

    /// Formal derivative with respect to ∂x, itself an operator.
    pub fn derivative(&self) -> Self {
        DiffOperator { value: self.value.derivative() }
    }

    /// Exact application to a polynomial in x: expand the operator as a
    /// power series in ∂x through deg f and sum weighted derivatives.
    pub fn apply(&self, f: &Poly) -> Poly {
        assert!(f.var() == Var::X, "operators act on polynomials in x");
        let weights = self.value.expansion(f.degree());
        let mut result = Poly::zero(Var::X);
        let mut derivative = f.clone();
        for k in 0..=f.degree() {
            result = result + derivative.scale(&weights.coefficient(k));
            if derivative.is_zero() {
                break;
            }
            derivative = derivative.derivative();
        }
        result
    }
}

/// A Padé-approximated Appell polynomial: the [m|n] operator of the
/// family's amplitude applied to x^index.
#[derive(Clone, PartialEq, Debug)]
pub struct ApproximatedPolynomial {
    family: Family,
    m: usize,
    n: usize,
    index: usize,
    value: Poly,
}

impl ApproximatedPolynomial {
    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    /// True iff the approximated polynomial coincides with the exact family
    /// member of the same index.
    pub fn matches_exact(&self) -> Result<bool> {
        Ok(self.value == self.family.exact_polynomial(self.index)?)
    }
}

/// Builds the [m|n] operator of the family's catalog amplitude and applies
/// it to x^index.
pub fn pade_appell(
    family: &Family,
    m: usize,
    n: usize,
    index: usize,
) -> Result<ApproximatedPolynomial> {
    let amplitude = family.catalog_amplitude().ok_or_else(|| {
        Error::Unsupported(format!(
            "family {} has no amplitude in the Padé catalog",
            family.name()
        ))
    })?;
    let entry = pade_of_amplitude(&amplitude, m, n)?;
    let op = DiffOperator::from_table_entry(&entry);
    let value = op.apply(&Poly::monomial(Var::X, Rational::one(), index));
    Ok(ApproximatedPolynomial { family: family.clone(), m, n, index, value })
}

/// The exactly-rational amplitude operators: 1/(1−y∂x) and 1/(1−y∂x²).
/// Other amplitudes are rational only through their Padé images.
pub fn exact_rational_operator(family: &Family) -> Option<DiffOperator> {
    let denom = match family {
        Family::TruncExp { y } => Poly::new(Var::Dx, vec![Rational::one(), -y]),
        Family::TruncExp2 { y } => {
            Poly::new(Var::Dx, vec![Rational::one(), Rational::zero(), -y])
        }
        _ => return None,
    };
    let value = RationalFunction::new(Poly::one(Var::Dx), denom).expect("constant term 1");
    Some(DiffOperator::new(value))
}

/// The ladder pair of an Appell family with rational amplitude A(∂x):
/// lowering is ∂x, raising is x + A′(∂x)/A(∂x).
pub struct Monomiality {
    log_derivative: DiffOperator,
}

impl Monomiality {
    /// Fails when A(0) = 0, which no amplitude in scope has.
    pub fn new(amplitude: &DiffOperator) -> Result<Self> {
        Ok(Monomiality {
            log_derivative: DiffOperator::new(amplitude.value.log_derivative()?),
        })
    }

    /// A′/A as an operator, the non-multiplicative part of raising.
    pub fn log_derivative(&self) -> &DiffOperator {
        &self.log_derivative
    }

    /// P̂: index n → n·(index n−1 member).
    pub fn lower(&self, f: &Poly) -> Poly {
        f.derivative()
    }

    /// M̂: index n → index n+1 member.
    pub fn raise(&self, f: &Poly) -> Poly {
        let x = Poly::monomial(Var::X, Rational::one(), 1);
        &x * f + self.log_derivative.apply(f)
    }
}

/// Residual of the operational index identity
/// [A(∂x)·x + A′(∂x)]·∂x aₙ − n·A(∂x) aₙ with aₙ = A(∂x){xⁿ}.
/// Identically zero for every amplitude operator.
pub fn monomiality_consistency_residual(amplitude: &DiffOperator, n: usize) -> Poly {
    let a_n = amplitude.apply(&Poly::monomial(Var::X, Rational::one(), n));
    let da = a_n.derivative();
    let x = Poly::monomial(Var::X, Rational::one(), 1);
    let lhs = amplitude.apply(&(&x * &da)) + amplitude.derivative().apply(&da);
    let rhs = amplitude.apply(&a_n).scale(&Rational::int(n as i64));
    lhs - rhs
}

/// Expansion weights of an operator through a given order, exposed for
/// umbral constructions that need the raw coefficients.
pub fn operator_weights(op: &RationalFunction, order: usize) -> PowerSeries {
    op.expansion(order)
}
