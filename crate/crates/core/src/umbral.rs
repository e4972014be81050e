//! Umbral images: formal symbols whose powers are projected onto number
//! sequences only after all polynomial algebra is done.
//!
//! An umbra is carried as the exponent key of a term map; a moment
//! functional sends power r to an exact rational moment. Keeping the umbra
//! symbolic until a single final projection is what makes identities like
//! the umbral Bernoulli Padé exact.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::families::{bernoulli_number, chebyshev_u};
use crate::pade::solve_pade;
use crate::poly::{Poly, Var};
use crate::rational::Rational;
use crate::series::{series_invert, PowerSeries};

/// Projection of umbra powers onto a number sequence.
#[derive(Clone, PartialEq, Debug)]
pub enum MomentFunctional {
    /// r ↦ B_r, the Bernoulli numbers.
    Bernoulli,
    /// r ↦ U_r(a,b), coefficients of 1/(1+at+bt²).
    Chebyshev { a: Rational, b: Rational },
    /// r ↦ 1/r!, the Bessel-type moments.
    FactorialReciprocal,
}

impl MomentFunctional {
    pub fn moment(&self, r: usize) -> Rational {
        match self {
            MomentFunctional::Bernoulli => bernoulli_number(r),
            MomentFunctional::Chebyshev { a, b } => chebyshev_u(r, a, b),
            MomentFunctional::FactorialReciprocal => Rational::factorial(r).recip(),
        }
    }
}

/// Polynomial in x whose coefficients also carry powers of one umbra:
/// Σ_r (umbra)ʳ · terms[r](x). The umbra commutes with everything.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct UmbralPolynomial {
    terms: BTreeMap<usize, Poly>,
}

impl UmbralPolynomial {
    pub fn new() -> Self {
        UmbralPolynomial { terms: BTreeMap::new() }
    }

    pub fn from_poly(p: Poly) -> Self {
        let mut u = UmbralPolynomial::new();
        u.add_term(0, p);
        u
    }

    /// Adds p·(umbra)ʳ, merging with any existing term at power r.
    pub fn add_term(&mut self, r: usize, p: Poly) {
        assert!(p.var() == Var::X, "umbral terms are polynomials in x");
        if p.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&r) {
            Some(existing) => existing + p,
            None => p,
        };
        if !merged.is_zero() {
            self.terms.insert(r, merged);
        }
    }

    pub fn term(&self, r: usize) -> Poly {
        self.terms.get(&r).cloned().unwrap_or_else(|| Poly::zero(Var::X))
    }

    pub fn terms(&self) -> &BTreeMap<usize, Poly> {
        &self.terms
    }

    /// Multiplication by (umbra)ᵏ.
    pub fn shift(&self, k: usize) -> Self {
        let terms = self.terms.iter().map(|(r, p)| (r + k, p.clone())).collect();
        UmbralPolynomial { terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut u = UmbralPolynomial::new();
        for (r, p) in &self.terms {
            u.add_term(*r, p.scale(c));
        }
        u
    }

    /// Projects the umbra away: Σ_r phi(r)·terms[r].
    pub fn linearize(&self, phi: &MomentFunctional) -> Poly {
        let mut result = Poly::zero(Var::X);
        for (r, p) in &self.terms {
            result = result + p.scale(&phi.moment(*r));
        }
        result
    }
}

impl std::ops::Add<&UmbralPolynomial> for &UmbralPolynomial {
    type Output = UmbralPolynomial;
    fn add(self, rhs: &UmbralPolynomial) -> UmbralPolynomial {
        let mut sum = self.clone();
        for (r, p) in &rhs.terms {
            sum.add_term(*r, p.clone());
        }
        sum
    }
}

/// Truncated exponential polynomial with the umbra in the parameter slot:
/// eₙ(x, c·û) = Σ_r ûʳ · n!/(n−r)! · cʳ x^(n−r).
pub fn umbral_trunc_exp(n: usize, scale: &Rational) -> UmbralPolynomial {
    let mut u = UmbralPolynomial::new();
    for r in 0..=n {
        let coeff = Rational::falling(n, r) * scale.pow(r);
        u.add_term(r, Poly::monomial(Var::X, coeff, n - r));
    }
    u
}

/// The [m|n]-approximated Bernoulli polynomial by the umbral route: take
/// the [m|n] entry of eᵛ, substitute v → B̂·∂x, expand on x^index (the
/// denominator inverse is a terminating series on polynomials), and project
/// with the Bernoulli functional.
pub fn umbral_pade_bernoulli(m: usize, n: usize, index: usize) -> Result<Poly> {
    let exp_series = PowerSeries::new(
        (0..=m + n).map(|r| Rational::factorial(r).recip()).collect(),
    );
    let entry = solve_pade(&exp_series, m, n)?;
    let weights = entry.value().expansion(index);
    let mut u = UmbralPolynomial::new();
    for k in 0..=index {
        let coeff = weights.coefficient(k) * Rational::falling(index, k);
        u.add_term(k, Poly::monomial(Var::X, coeff, index - k));
    }
    Ok(u.linearize(&MomentFunctional::Bernoulli))
}

/// The same [1|1] Bernoulli value through its explicit umbral closed form
/// eₙ(x, B̂/2) + (n/2)·B̂·eₙ₋₁(x, B̂/2), projected at the end.
pub fn umbral_bernoulli_closed_form(n: usize) -> Poly {
    let half = Rational::new(1, 2);
    let mut u = umbral_trunc_exp(n, &half);
    if n >= 1 {
        let correction = umbral_trunc_exp(n - 1, &half)
            .shift(1)
            .scale(&Rational::new(n as i64, 2));
        u = &u + &correction;
    }
    u.linearize(&MomentFunctional::Bernoulli)
}

/// The [0|2]-approximated Euler polynomial as the projection of eₙ(x, û)
/// under the Chebyshev functional of 1/(1+at+bt²). Valid for any (a,b);
/// (1/2, 1/4) reproduces the Euler amplitude's [0|2] entry.
pub fn umbral_euler_02(n: usize, a: &Rational, b: &Rational) -> Poly {
    umbral_trunc_exp(n, &Rational::one())
        .linearize(&MomentFunctional::Chebyshev { a: a.clone(), b: b.clone() })
}

/// The [1|2]-approximated Euler polynomial: eₙ(x, û) − (n/3)·eₙ₋₁(x, û)
/// projected with the Chebyshev functional at (1/6, 1/12), the parameter
/// pair of the [1|2] Euler denominator.
pub fn umbral_euler_12(n: usize) -> Poly {
    let mut u = umbral_trunc_exp(n, &Rational::one());
    if n >= 1 {
        let correction =
            umbral_trunc_exp(n - 1, &Rational::one()).scale(&Rational::new(-(n as i64), 3));
        u = &u + &correction;
    }
    u.linearize(&MomentFunctional::Chebyshev {
        a: Rational::new(1, 6),
        b: Rational::new(1, 12),
    })
}

/// Second-order Bernoulli polynomials: the Gauss-type family with the
/// parameter replaced by y·B̂, i.e. n! Σ_r x^(n−2r) yʳ B_r / ((n−2r)! r!).
pub fn bernoulli_order2(n: usize, y: &Rational) -> Poly {
    let mut u = UmbralPolynomial::new();
    for r in 0..=(n / 2) {
        let coeff = Rational::falling(n, 2 * r) * y.pow(r) / Rational::factorial(r);
        u.add_term(r, Poly::monomial(Var::X, coeff, n - 2 * r));
    }
    u.linearize(&MomentFunctional::Bernoulli)
}

/// Even power series of the [0|k]-approximated J₀: coefficient of x^(2r) is
/// V_r / (4ʳ r!), with V the series inverse of the degree-k Taylor
/// polynomial of eᵘ. Exact rational coefficients through x^(2·terms).
pub fn bessel_pade_series(k: usize, terms: usize) -> PowerSeries {
    assert!(k >= 1, "denominator order must be at least 1");
    let taylor = Poly::new(
        Var::T,
        (0..=k).map(|j| Rational::factorial(j).recip()).collect(),
    );
    let v = series_invert(&taylor, terms).expect("constant term is 1");
    let mut coeffs = vec![Rational::zero(); 2 * terms + 1];
    let mut scale = Rational::one();
    for r in 0..=terms {
        if r > 0 {
            scale = scale / Rational::int(4 * r as i64);
        }
        coeffs[2 * r] = v.coefficient(r) * &scale;
    }
    PowerSeries::new(coeffs)
}
