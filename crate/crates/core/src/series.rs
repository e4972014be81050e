//! Truncated Maclaurin series with exact coefficients.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

/// Coefficients c_0..c_order of a power series, all known exactly.
/// Unlike [`Poly`], a coefficient past the stored order is unknown, not zero,
/// so out-of-range access panics instead of defaulting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Builds a series from c_0..c_k. At least the constant term is required.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        PowerSeries { coeffs }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        PowerSeries::new((0..=order).map(|k| p.coefficient(k)).collect())
    }

    /// Highest known power.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        assert!(
            k <= self.order(),
            "coefficient {k} beyond truncation order {}",
            self.order()
        );
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        assert!(order <= self.order(), "cannot extend a series by truncating");
        PowerSeries::new(self.coeffs[..=order].to_vec())
    }

    /// Cauchy product truncated at `order`.
    pub fn mul_trunc(&self, other: &PowerSeries, order: usize) -> PowerSeries {
        assert!(self.order() >= order && other.order() >= order, "operands too short");
        let coeffs = (0..=order)
            .map(|k| (0..=k).map(|j| self.coefficient(j) * other.coefficient(k - j)).sum())
            .collect();
        PowerSeries::new(coeffs)
    }

    /// Substitutes t := scale·s^power term by term, so c_k lands on
    /// s^(k·power) with a factor scale^k. Output order is order·power.
    pub fn substitute(&self, scale: &Rational, power: usize) -> PowerSeries {
        assert!(power >= 1, "substitution power must be at least 1");
        let mut coeffs = vec![Rational::zero(); self.order() * power + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * power] = c * scale.pow(k);
        }
        PowerSeries::new(coeffs)
    }
}

/// First `order`+1 coefficients of 1/q for a polynomial q with q(0) = 1.
///
/// Uses the convolution recurrence c_n = −Σ_{k=1..n} q_k·c_{n−k}; exact at
/// every step.
pub fn series_invert(q: &Poly, order: usize) -> Result<PowerSeries> {
    let q0 = q.coefficient(0);
    if !q0.is_one() {
        return Err(Error::NonUnitConstant { got: q0 });
    }
    let mut c = Vec::with_capacity(order + 1);
    c.push(Rational::one());
    for n in 1..=order {
        let acc: Rational = (1..=n.min(q.degree()))
            .map(|k| q.coefficient(k) * &c[n - k])
            .sum();
        c.push(-acc);
    }
    Ok(PowerSeries::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn tp(coeffs: &[&str]) -> Poly {
        Poly::new(Var::T, coeffs.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn invert_geometric() {
        let inv = series_invert(&tp(&["1", "-1"]), 3).unwrap();
        assert_eq!(inv.coeffs(), &[q("1"), q("1"), q("1"), q("1")]);
    }

    #[test]
    fn invert_linear_half() {
        let inv = series_invert(&tp(&["1", "1/2"]), 2).unwrap();
        assert_eq!(inv.coeffs(), &[q("1"), q("-1/2"), q("1/4")]);
    }

    #[test]
    fn invert_quadratic_euler_like() {
        let inv = series_invert(&tp(&["1", "1/2", "1/4"]), 3).unwrap();
        assert_eq!(inv.coeffs(), &[q("1"), q("-1/2"), q("0"), q("1/8")]);
    }

    #[test]
    fn invert_roundtrip_to_one() {
        let p = tp(&["1", "1/3", "-2", "0", "5/7"]);
        let inv = series_invert(&p, 9).unwrap();
        let back = PowerSeries::from_poly(&p, 9).mul_trunc(&inv, 9);
        assert_eq!(back.coefficient(0), q("1"));
        for k in 1..=9 {
            assert!(back.coefficient(k).is_zero(), "power {k}");
        }
    }

    #[test]
    fn invert_requires_unit_constant() {
        let err = series_invert(&tp(&["2", "1"]), 3).unwrap_err();
        assert_eq!(err, Error::NonUnitConstant { got: q("2") });
    }

    #[test]
    fn substitute_even() {
        // 1 - u + u^2/2 with u := t^2/2 -> 1 - t^2/2 + t^4/8
        let s = PowerSeries::new(vec![q("1"), q("-1"), q("1/2")]);
        let even = s.substitute(&q("1/2"), 2);
        assert_eq!(even.coeffs(), &[q("1"), q("0"), q("-1/2"), q("0"), q("1/8")]);
    }

    #[test]
    fn substitute_scale_only() {
        let s = PowerSeries::new(vec![q("1"), q("1"), q("1/2")]);
        let scaled = s.substitute(&q("-3"), 1);
        assert_eq!(scaled.coeffs(), &[q("1"), q("-3"), q("9/2")]);
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn coefficient_past_order_panics() {
        let s = PowerSeries::new(vec![q("1")]);
        let _ = s.coefficient(1);
    }
}
