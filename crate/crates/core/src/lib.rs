//! Exact Padé approximation of Appell generating-function amplitudes, and the
//! polynomial families the approximated operators produce.
//!
//! An Appell family is defined by its amplitude A(t) through the generating
//! product A(t)·e^(xt); replacing t by ∂x turns the amplitude into an
//! operator whose image of xⁿ is the degree-n member. This crate computes
//! [m|n] Padé approximants of amplitudes in exact rational arithmetic,
//! applies them as differential operators, and verifies the closed forms,
//! differential equations, monomiality ladders, and umbral representations
//! that the approximated families satisfy.
//!
//! Everything symbolic runs over arbitrary-precision rationals; floating
//! point enters only in [`grid`], where curves are sampled for CSV emission.
//!
//! # Basic usage
//!
//! ```
//! use appell_pade::{pade_of_amplitude, Amplitude, Family, pade_appell};
//!
//! // [0|2] of e^(-t): denominator 1 + t + t²/2.
//! let entry = pade_of_amplitude(&Amplitude::ExpNeg, 0, 2).unwrap();
//! assert_eq!(entry.value().denom().to_string(), "1 + t + 1/2*t^2");
//!
//! // The [1|1] image of x⁴ under the probabilists' Hermite amplitude
//! // reproduces the exact polynomial.
//! let image = pade_appell(&Family::He, 1, 1, 4).unwrap();
//! assert!(image.matches_exact().unwrap());
//! ```

pub mod amplitude;
pub mod bessel;
pub mod error;
pub mod families;
pub mod figures;
pub mod grid;
pub mod identities;
pub mod operator;
pub mod pade;
pub mod poly;
pub mod rational;
pub mod ratfunc;
pub mod series;
pub mod umbral;
pub mod verify;

pub use amplitude::Amplitude;
pub use error::{Error, Result};
pub use families::Family;
pub use figures::{figure_csv, figure_emit, figure_job, FigureId, FigureJob};
pub use grid::{eval_grid, sup_error, Curve, GridSpec};
pub use identities::{closed_form, ode_residual, operator_route, OdeId, TheoremId};
pub use operator::{pade_appell, ApproximatedPolynomial, DiffOperator, Monomiality};
pub use pade::{pade_of_amplitude, solve_pade, PadeApproximant};
pub use poly::{Poly, Var};
pub use rational::Rational;
pub use ratfunc::RationalFunction;
pub use series::PowerSeries;
pub use verify::{run_suite, CheckReport, Suite};
