//! The catalog of generating-function amplitudes A(t).
//!
//! Each Appell-type family below is Σ tⁿ/n!·aₙ(x) = A(t)·e^{xt}; the
//! amplitude alone determines the family, so the catalog is the single
//! source of truth for Maclaurin data on the Padé side.

use crate::rational::Rational;
use crate::series::{series_invert, PowerSeries};
use crate::poly::{Poly, Var};

/// Closed catalog of supported amplitudes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Amplitude {
    /// e^(−t), the binomial Hermite amplitude at y = −1.
    ExpNeg,
    /// e^(−t²/2), the probabilist Hermite amplitude.
    ExpNegHalfSquare,
    /// 1/(1 − yt), the truncated-exponential amplitude.
    TruncExp { y: Rational },
    /// 2/(eᵗ + 1), the Euler amplitude.
    Euler,
    /// t/(eᵗ − 1), the Bernoulli amplitude.
    Bernoulli,
    /// e^(yt²), the two-variable Hermite amplitude.
    Hermite2 { y: Rational },
}

impl Amplitude {
    pub fn name(&self) -> &'static str {
        match self {
            Amplitude::ExpNeg => "exp_neg",
            Amplitude::ExpNegHalfSquare => "exp_neg_half_square",
            Amplitude::TruncExp { .. } => "trunc_exp",
            Amplitude::Euler => "euler",
            Amplitude::Bernoulli => "bernoulli",
            Amplitude::Hermite2 { .. } => "hermite2",
        }
    }

    /// True for amplitudes that are functions of t² and get their Padé
    /// entries solved in the inner variable.
    pub fn is_even(&self) -> bool {
        matches!(self, Amplitude::ExpNegHalfSquare | Amplitude::Hermite2 { .. })
    }

    /// Exact Maclaurin coefficients c_0..c_order.
    pub fn maclaurin(&self, order: usize) -> PowerSeries {
        match self {
            Amplitude::ExpNeg => {
                // (−1)^r / r!
                let mut c = Vec::with_capacity(order + 1);
                let mut term = Rational::one();
                c.push(term.clone());
                for r in 1..=order {
                    term = term / Rational::int(-(r as i64));
                    c.push(term.clone());
                }
                PowerSeries::new(c)
            }
            Amplitude::ExpNegHalfSquare => {
                Amplitude::ExpNeg.maclaurin(order / 2).substitute(&Rational::new(1, 2), 2).pad_to(order)
            }
            Amplitude::TruncExp { y } => {
                PowerSeries::new((0..=order).map(|r| y.pow(r)).collect())
            }
            Amplitude::Euler => {
                // 2/(eᵗ+1) = 1 / (1 + Σ_{r≥1} tʳ/(2·r!))
                let denom = Poly::new(
                    Var::T,
                    (0..=order)
                        .map(|r| {
                            if r == 0 {
                                Rational::one()
                            } else {
                                (Rational::int(2) * Rational::factorial(r)).recip()
                            }
                        })
                        .collect(),
                );
                series_invert(&denom, order).expect("constant term is 1")
            }
            Amplitude::Bernoulli => {
                // t/(eᵗ−1) = 1 / Σ_{r≥0} tʳ/(r+1)!
                let denom = Poly::new(
                    Var::T,
                    (0..=order).map(|r| Rational::factorial(r + 1).recip()).collect(),
                );
                series_invert(&denom, order).expect("constant term is 1")
            }
            Amplitude::Hermite2 { y } => {
                // e^(yt²): (t²)^k carries yᵏ/k!
                let mut c = vec![Rational::zero(); order + 1];
                let mut term = Rational::one();
                let mut k = 0usize;
                while 2 * k <= order {
                    c[2 * k] = term.clone();
                    k += 1;
                    term = term * y / Rational::int(k as i64);
                }
                PowerSeries::new(c)
            }
        }
    }
}

impl PowerSeries {
    /// Zero-extends an even-amplitude expansion to the requested order.
    /// Only valid when the dropped coefficients are genuinely zero, which
    /// holds for series in t² extended by at most one odd slot.
    fn pad_to(&self, order: usize) -> PowerSeries {
        if self.order() >= order {
            return self.truncate(order);
        }
        let mut c = self.coeffs().to_vec();
        c.resize(order + 1, Rational::zero());
        PowerSeries::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn exp_neg_series() {
        let c = Amplitude::ExpNeg.maclaurin(3);
        assert_eq!(c.coeffs(), &[q("1"), q("-1"), q("1/2"), q("-1/6")]);
    }

    #[test]
    fn exp_neg_half_square_series() {
        let c = Amplitude::ExpNegHalfSquare.maclaurin(4);
        assert_eq!(c.coeffs(), &[q("1"), q("0"), q("-1/2"), q("0"), q("1/8")]);
        // Odd truncation keeps the trailing zero slot.
        assert_eq!(Amplitude::ExpNegHalfSquare.maclaurin(5).order(), 5);
        assert!(Amplitude::ExpNegHalfSquare.maclaurin(5).coefficient(5).is_zero());
    }

    #[test]
    fn euler_series() {
        let c = Amplitude::Euler.maclaurin(5);
        assert_eq!(
            c.coeffs(),
            &[q("1"), q("-1/2"), q("0"), q("1/24"), q("0"), q("-1/240")]
        );
    }

    #[test]
    fn bernoulli_series() {
        let c = Amplitude::Bernoulli.maclaurin(4);
        assert_eq!(c.coeffs(), &[q("1"), q("-1/2"), q("1/12"), q("0"), q("-1/720")]);
    }

    #[test]
    fn trunc_exp_series_is_geometric() {
        let c = Amplitude::TruncExp { y: q("-1/2") }.maclaurin(3);
        assert_eq!(c.coeffs(), &[q("1"), q("-1/2"), q("1/4"), q("-1/8")]);
    }

    #[test]
    fn hermite2_series() {
        let c = Amplitude::Hermite2 { y: q("1/3") }.maclaurin(5);
        assert_eq!(
            c.coeffs(),
            &[q("1"), q("0"), q("1/3"), q("0"), q("1/18"), q("0")]
        );
    }
}
