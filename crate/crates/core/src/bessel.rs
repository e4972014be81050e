//! Reference evaluation of the zeroth-order cylindrical Bessel function.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::PowerSeries;

/// Largest |x| the series evaluation is vouched for: inside this window the
/// alternating terms stay small enough that the absolute error is < 1e−12.
pub const J0_WINDOW: f64 = 12.0;

/// J₀(x) by its power series Σ (−1)ʳ (x/2)^(2r) / (r!)², summed until the
/// next term drops below 1e−16.
pub fn reference_j0(x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > J0_WINDOW {
        return Err(Error::OutOfRange { x, limit: J0_WINDOW });
    }
    let mut sum = 0.0;
    let mut term = 1.0f64;
    let mut r = 0u32;
    while term.abs() >= 1e-16 {
        sum += term;
        r += 1;
        term *= -x * x / (4.0 * f64::from(r * r));
    }
    Ok(sum)
}

/// Exact Maclaurin coefficients of J₀ through x^(2·terms): the x^(2r) slot
/// holds (−1)ʳ / (4ʳ (r!)²), odd slots are zero.
pub fn j0_maclaurin(terms: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); 2 * terms + 1];
    let mut c = Rational::one();
    coeffs[0] = c.clone();
    for r in 1..=terms {
        c = c / Rational::int(-4 * (r * r) as i64);
        coeffs[2 * r] = c.clone();
    }
    PowerSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_zero_and_one() {
        assert_eq!(reference_j0(0.0).unwrap(), 1.0);
        assert!((reference_j0(1.0).unwrap() - 0.7651976865579666).abs() < 1e-12);
    }

    #[test]
    fn vanishes_at_the_first_zero() {
        assert!(reference_j0(2.404825557695773).unwrap().abs() < 1e-9);
    }

    #[test]
    fn even_in_x() {
        for x in [0.5, 1.7, 8.0, 11.9] {
            assert_eq!(reference_j0(x).unwrap(), reference_j0(-x).unwrap());
        }
    }

    #[test]
    fn rejects_out_of_window_input() {
        assert!(matches!(
            reference_j0(12.5),
            Err(Error::OutOfRange { .. })
        ));
        assert!(reference_j0(f64::NAN).is_err());
    }

    #[test]
    fn maclaurin_coefficients() {
        let s = j0_maclaurin(3);
        assert_eq!(s.coefficient(0), "1".parse().unwrap());
        assert_eq!(s.coefficient(2), "-1/4".parse().unwrap());
        assert_eq!(s.coefficient(4), "1/64".parse().unwrap());
        assert_eq!(s.coefficient(6), "-1/2304".parse().unwrap());
        assert_eq!(s.coefficient(3), "0".parse().unwrap());
    }

    #[test]
    fn series_evaluation_matches_exact_partial_sums() {
        // At x = 2 the 20-term exact partial sum is well past convergence;
        // the float loop must land within accumulated rounding of it.
        let exact: f64 = (0..20)
            .map(|r| {
                let c = j0_maclaurin(19).coefficient(2 * r).to_f64();
                c * 2f64.powi(2 * r as i32)
            })
            .sum();
        assert!((reference_j0(2.0).unwrap() - exact).abs() < 1e-13);
    }
}
