//! Exact reference constructions of the polynomial families and number
//! sequences everything else is checked against.
//!
//! Each family is a sequence a_n(x) with generating relation
//! Σ a_n(x)tⁿ/n! = A(t)e^(xt) for its amplitude A. Two-variable families
//! bind the second variable y to an exact rational up front, keeping the
//! algebra univariate.

use crate::amplitude::Amplitude;
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::Rational;
use crate::series::PowerSeries;

/// Polynomial family selector. `Chebyshev2` is the coefficient sequence of
/// 1/(1+at+bt²); it has no Appell amplitude and only its numbers are used.
#[derive(Clone, PartialEq, Debug)]
pub enum Family {
    /// (x+y)ⁿ, amplitude e^(yt).
    Hermite1 { y: Rational },
    /// n! Σ_r x^(n−2r) yʳ / ((n−2r)! r!), amplitude e^(yt²).
    Hermite2 { y: Rational },
    /// Probabilists' Hermite polynomials: `Hermite2` at y = −1/2.
    He,
    /// Truncated exponentials n! Σ_r x^(n−r) yʳ / (n−r)!, amplitude 1/(1−yt).
    TruncExp { y: Rational },
    /// Second-order truncated exponentials n! Σ_r x^(n−2r) yʳ / (n−2r)!,
    /// amplitude 1/(1−yt²).
    TruncExp2 { y: Rational },
    /// Number sequence U_r(a,b) only; not an Appell family.
    Chebyshev2 { a: Rational, b: Rational },
    /// Euler polynomials, amplitude 2/(eᵗ+1).
    Euler,
    /// Bernoulli polynomials, amplitude t/(eᵗ−1).
    Bernoulli,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Hermite1 { .. } => "hermite1",
            Family::Hermite2 { .. } => "hermite2",
            Family::He => "he",
            Family::TruncExp { .. } => "trunc_exp",
            Family::TruncExp2 { .. } => "trunc_exp2",
            Family::Chebyshev2 { .. } => "chebyshev2",
            Family::Euler => "euler",
            Family::Bernoulli => "bernoulli",
        }
    }

    /// The degree-n member, built from its explicit finite sum (not from the
    /// generating product, which `generating_check` compares against).
    pub fn exact_polynomial(&self, n: usize) -> Result<Poly> {
        let poly = match self {
            Family::Hermite1 { y } => {
                let coeffs = (0..=n)
                    .map(|k| Rational::binomial(n, n - k) * y.pow(n - k))
                    .collect();
                Poly::new(Var::X, coeffs)
            }
            Family::Hermite2 { y } => gauss_sum(n, y, true),
            Family::He => gauss_sum(n, &Rational::new(-1, 2), true),
            Family::TruncExp { y } => {
                let coeffs = (0..=n)
                    .map(|k| Rational::falling(n, n - k) * y.pow(n - k))
                    .collect();
                Poly::new(Var::X, coeffs)
            }
            Family::TruncExp2 { y } => gauss_sum(n, y, false),
            Family::Chebyshev2 { .. } => {
                return Err(Error::Unsupported(
                    "chebyshev2 is a number sequence, not a polynomial family".into(),
                ))
            }
            Family::Euler => appell_polynomial(&Amplitude::Euler.maclaurin(n), n),
            Family::Bernoulli => appell_polynomial(&Amplitude::Bernoulli.maclaurin(n), n),
        };
        Ok(poly)
    }

    /// Maclaurin coefficients of the family's amplitude, including the
    /// parameterized exponential kinds that the Padé catalog does not carry.
    pub fn amplitude_series(&self, order: usize) -> Result<PowerSeries> {
        let series = match self {
            Family::Hermite1 { y } => PowerSeries::new(
                (0..=order)
                    .map(|r| y.pow(r) / Rational::factorial(r))
                    .collect(),
            ),
            Family::Hermite2 { y } => PowerSeries::new(
                (0..=order)
                    .map(|r| {
                        if r % 2 == 0 {
                            y.pow(r / 2) / Rational::factorial(r / 2)
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect(),
            ),
            Family::He => Amplitude::ExpNegHalfSquare.maclaurin(order),
            Family::TruncExp { y } => {
                PowerSeries::new((0..=order).map(|r| y.pow(r)).collect())
            }
            Family::TruncExp2 { y } => PowerSeries::new(
                (0..=order)
                    .map(|r| if r % 2 == 0 { y.pow(r / 2) } else { Rational::zero() })
                    .collect(),
            ),
            Family::Chebyshev2 { .. } => {
                return Err(Error::Unsupported(
                    "chebyshev2 has no Appell amplitude".into(),
                ))
            }
            Family::Euler => Amplitude::Euler.maclaurin(order),
            Family::Bernoulli => Amplitude::Bernoulli.maclaurin(order),
        };
        Ok(series)
    }

    /// The catalog amplitude usable for Padé approximation, when one exists.
    /// `Hermite1` qualifies only at y = −1 (amplitude e^(−t)); `TruncExp2`
    /// and `Chebyshev2` never do.
    pub fn catalog_amplitude(&self) -> Option<Amplitude> {
        match self {
            Family::Hermite1 { y } if *y == Rational::int(-1) => Some(Amplitude::ExpNeg),
            Family::Hermite1 { .. } => None,
            Family::Hermite2 { y } => Some(Amplitude::Hermite2 { y: y.clone() }),
            Family::He => Some(Amplitude::ExpNegHalfSquare),
            Family::TruncExp { y } => Some(Amplitude::TruncExp { y: y.clone() }),
            Family::TruncExp2 { .. } | Family::Chebyshev2 { .. } => None,
            Family::Euler => Some(Amplitude::Euler),
            Family::Bernoulli => Some(Amplitude::Bernoulli),
        }
    }

    /// Compares the explicit sums against the generating product
    /// A(t)·e^(xt): true iff exact_polynomial(n) = n!·[tⁿ](product) as
    /// polynomials in x for every n ≤ order.
    pub fn generating_check(&self, order: usize) -> Result<bool> {
        let c = self.amplitude_series(order)?;
        for n in 0..=order {
            if self.exact_polynomial(n)? != appell_polynomial(&c, n) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// n! Σ_{r≤n/2} x^(n−2r) yʳ / (n−2r)! · (1/r! when `with_r_factorial`).
fn gauss_sum(n: usize, y: &Rational, with_r_factorial: bool) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for r in 0..=(n / 2) {
        let mut c = Rational::falling(n, 2 * r) * y.pow(r);
        if with_r_factorial {
            c = c / Rational::factorial(r);
        }
        coeffs[n - 2 * r] = c;
    }
    Poly::new(Var::X, coeffs)
}

/// Degree-n Appell polynomial of an amplitude given by its Maclaurin
/// coefficients: n! Σ_{r≤n} c_r x^(n−r) / (n−r)!.
pub fn appell_polynomial(c: &PowerSeries, n: usize) -> Poly {
    assert!(c.order() >= n, "amplitude series must reach order n");
    let coeffs = (0..=n)
        .map(|k| Rational::falling(n, n - k) * c.coefficient(n - k))
        .collect();
    Poly::new(Var::X, coeffs)
}

/// Chebyshev-type numbers of 1/(1+at+bt²) with a growing cache.
pub struct ChebyshevNumbers {
    a: Rational,
    b: Rational,
    cache: Vec<Rational>,
}

impl ChebyshevNumbers {
    pub fn new(a: Rational, b: Rational) -> Self {
        ChebyshevNumbers { a, b, cache: vec![Rational::one()] }
    }

    /// U_r(a,b): U₀ = 1, U₁ = −a, U_r = −a·U_{r−1} − b·U_{r−2}.
    pub fn value(&mut self, r: usize) -> Rational {
        while self.cache.len() <= r {
            let k = self.cache.len();
            let mut next = -(&self.a * &self.cache[k - 1]);
            if k >= 2 {
                next = next - &self.b * &self.cache[k - 2];
            }
            self.cache.push(next);
        }
        self.cache[r].clone()
    }
}

/// One-off U_r(a,b) without keeping the cache.
pub fn chebyshev_u(r: usize, a: &Rational, b: &Rational) -> Rational {
    ChebyshevNumbers::new(a.clone(), b.clone()).value(r)
}

/// Bernoulli numbers B_r with a growing cache.
pub struct BernoulliNumbers {
    cache: Vec<Rational>,
}

impl BernoulliNumbers {
    pub fn new() -> Self {
        BernoulliNumbers { cache: vec![Rational::one()] }
    }

    /// B_r from the recurrence Σ_{j=0}^{r} C(r+1, j)·B_j = 0 for r ≥ 1.
    pub fn value(&mut self, r: usize) -> Rational {
        while self.cache.len() <= r {
            let k = self.cache.len();
            let sum: Rational = (0..k)
                .map(|j| Rational::binomial(k + 1, j) * &self.cache[j])
                .sum();
            self.cache.push(-sum / Rational::int((k + 1) as i64));
        }
        self.cache[r].clone()
    }
}

impl Default for BernoulliNumbers {
    fn default() -> Self {
        Self::new()
    }
}

/// One-off B_r without keeping the cache.
pub fn bernoulli_number(r: usize) -> Rational {
    BernoulliNumbers::new().value(r)
}
