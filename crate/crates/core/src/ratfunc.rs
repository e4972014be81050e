//! Ratios of polynomials, normalized so the denominator has constant term 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::Rational;
use crate::series::{series_invert, PowerSeries};

/// numer/denom with denom(0) = 1. The normalization makes the Maclaurin
/// expansion well defined and lets the ratio act on polynomials as an
/// operator series later on.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numer: Poly,
    denom: Poly,
}

impl RationalFunction {
    /// Divides both parts by denom(0); fails if that constant term is zero.
    pub fn new(numer: Poly, denom: Poly) -> Result<Self> {
        assert!(
            numer.var() == denom.var(),
            "numerator and denominator must share a variable"
        );
        let d0 = denom.coefficient(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = d0.recip();
        Ok(RationalFunction { numer: numer.scale(&inv), denom: denom.scale(&inv) })
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RationalFunction { numer: p, denom: Poly::one(var) }
    }

    pub fn one(var: Var) -> Self {
        RationalFunction::from_poly(Poly::one(var))
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    pub fn var(&self) -> Var {
        self.numer.var()
    }

    pub fn retag(&self, var: Var) -> Self {
        RationalFunction { numer: self.numer.retag(var), denom: self.denom.retag(var) }
    }

    /// Maclaurin expansion through `order`, via denominator inversion.
    pub fn expansion(&self, order: usize) -> PowerSeries {
        let inv = series_invert(&self.denom, order).expect("denominator constant is 1");
        PowerSeries::from_poly(&self.numer, order).mul_trunc(&inv, order)
    }

    /// Formal derivative (N'D − ND')/D². The result keeps a unit constant
    /// in its denominator, so it can be applied as an operator again.
    pub fn derivative(&self) -> Self {
        let num = &(&self.numer.derivative() * &self.denom)
            - &(&self.numer * &self.denom.derivative());
        let den = &self.denom * &self.denom;
        RationalFunction::new(num, den).expect("D^2 keeps constant term 1")
    }

    /// Logarithmic derivative A'/A = (N'D − ND')/(DN).
    /// Fails when N(0) = 0, since then A'/A has no expansion at 0.
    pub fn log_derivative(&self) -> Result<Self> {
        let num = &(&self.numer.derivative() * &self.denom)
            - &(&self.numer * &self.denom.derivative());
        let den = &self.denom * &self.numer;
        RationalFunction::new(num, den)
    }

    /// Exact value at a rational point; fails on a zero denominator.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.denom.eval(at);
        if d.is_zero() {
            return Err(Error::Pole { x: at.to_f64() });
        }
        Ok(self.numer.eval(at) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numer, self.denom)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn tp(coeffs: &[&str]) -> Poly {
        Poly::new(Var::T, coeffs.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn normalizes_constant_term() {
        // (2 - 2t) / (2 + t) -> (1 - t) / (1 + t/2)
        let f = RationalFunction::new(tp(&["2", "-2"]), tp(&["2", "1"])).unwrap();
        assert_eq!(f.numer(), &tp(&["1", "-1"]));
        assert_eq!(f.denom(), &tp(&["1", "1/2"]));
    }

    #[test]
    fn rejects_vanishing_denominator_at_zero() {
        let err = RationalFunction::new(tp(&["1"]), tp(&["0", "1"])).unwrap_err();
        assert_eq!(err, Error::ZeroConstantTerm);
    }

    #[test]
    fn expansion_of_simple_pole() {
        let f = RationalFunction::new(tp(&["1"]), tp(&["1", "-1"])).unwrap();
        assert_eq!(f.expansion(3).coeffs(), &[q("1"), q("1"), q("1"), q("1")]);
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dt [t / (1 + t)] = 1 / (1 + t)^2
        let f = RationalFunction::new(tp(&["0", "1"]), tp(&["1", "1"])).unwrap();
        let d = f.derivative();
        assert_eq!(d.numer(), &tp(&["1"]));
        assert_eq!(d.denom(), &tp(&["1", "2", "1"]));
    }

    #[test]
    fn log_derivative_cancels_symmetric_parts() {
        // A = (1 - t/2)/(1 + t/2): A'/A = -1/(1 - t^2/4)
        let f = RationalFunction::new(tp(&["1", "-1/2"]), tp(&["1", "1/2"])).unwrap();
        let ld = f.log_derivative().unwrap();
        assert_eq!(ld.numer(), &tp(&["-1"]));
        assert_eq!(ld.denom(), &tp(&["1", "0", "-1/4"]));
    }

    #[test]
    fn eval_detects_pole() {
        let f = RationalFunction::new(tp(&["1"]), tp(&["1", "-1"])).unwrap();
        assert_eq!(f.eval(&q("1/2")).unwrap(), q("2"));
        assert!(f.eval(&q("1")).is_err());
    }
}
