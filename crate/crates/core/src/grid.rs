//! Uniform evaluation grids and double-precision sampling of exact curves.
//!
//! Exact objects cross into floating point here, in one place: every rational
//! coefficient is converted once (correctly rounded), then evaluation runs in
//! IEEE doubles. Identical inputs therefore give bit-identical samples.

use crate::bessel::reference_j0;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RationalFunction;
use crate::series::PowerSeries;

/// Uniformly spaced abscissae on [xmin, xmax].
#[derive(Clone, PartialEq, Debug)]
pub struct GridSpec {
    xmin: f64,
    xmax: f64,
    points: usize,
}

impl GridSpec {
    pub fn new(xmin: f64, xmax: f64, points: usize) -> Result<Self> {
        if !xmin.is_finite() || !xmax.is_finite() {
            return Err(Error::Grid(format!("bounds must be finite, got [{xmin}, {xmax}]")));
        }
        if xmin >= xmax {
            return Err(Error::Grid(format!("need xmin < xmax, got [{xmin}, {xmax}]")));
        }
        if points < 2 {
            return Err(Error::Grid(format!("need at least 2 points, got {points}")));
        }
        Ok(GridSpec { xmin, xmax, points })
    }

    pub fn xmin(&self) -> f64 {
        self.xmin
    }

    pub fn xmax(&self) -> f64 {
        self.xmax
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// i-th abscissa. The endpoints are exactly xmin and xmax.
    pub fn abscissa(&self, i: usize) -> f64 {
        assert!(i < self.points, "abscissa {i} beyond grid of {} points", self.points);
        let fraction = i as f64 / (self.points - 1) as f64;
        self.xmin + (self.xmax - self.xmin) * fraction
    }

    pub fn abscissae(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.abscissa(i)).collect()
    }
}

fn coeffs_to_f64(coeffs: &[crate::rational::Rational]) -> Vec<f64> {
    coeffs.iter().map(|c| c.to_f64()).collect()
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// A curve that can be sampled on a grid. Polynomials and rational functions
/// carry exact coefficients; the transcendental references evaluate directly
/// in doubles.
#[derive(Clone, Debug)]
pub enum Curve {
    Poly(Poly),
    Rational(RationalFunction),
    /// e^(−x).
    ExpNeg,
    /// The J₀ reference series, valid for |x| ≤ 12.
    BesselJ0,
}

impl Curve {
    /// Treats a truncated series as the polynomial it spells out.
    pub fn from_series(s: &PowerSeries) -> Curve {
        Curve::Poly(Poly::new(crate::poly::Var::X, s.coeffs().to_vec()))
    }
}

/// Samples the curve at every grid point.
pub fn eval_grid(curve: &Curve, g: &GridSpec) -> Result<Vec<(f64, f64)>> {
    let xs = g.abscissae();
    match curve {
        Curve::Poly(p) => {
            let c = coeffs_to_f64(p.coeffs());
            Ok(xs.into_iter().map(|x| (x, horner(&c, x))).collect())
        }
        Curve::Rational(r) => {
            let num = coeffs_to_f64(r.numer().coeffs());
            let den = coeffs_to_f64(r.denom().coeffs());
            xs.into_iter()
                .map(|x| {
                    let d = horner(&den, x);
                    if d == 0.0 {
                        Err(Error::Pole { x })
                    } else {
                        Ok((x, horner(&num, x) / d))
                    }
                })
                .collect()
        }
        Curve::ExpNeg => Ok(xs.into_iter().map(|x| (x, (-x).exp())).collect()),
        Curve::BesselJ0 => xs
            .into_iter()
            .map(|x| reference_j0(x).map(|v| (x, v)))
            .collect(),
    }
}

/// max |aᵢ − bᵢ| over two samplings of the same grid.
pub fn sup_error(a: &[(f64, f64)], b: &[(f64, f64)]) -> Result<f64> {
    if a.len() != b.len() || a.iter().zip(b).any(|(p, q)| p.0 != q.0) {
        return Err(Error::GridMismatch);
    }
    Ok(a.iter()
        .zip(b)
        .map(|(p, q)| (p.1 - q.1).abs())
        .fold(0.0, f64::max))
}
