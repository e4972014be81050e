use crate::rational::Rational;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The linear system defining a Padé entry is unsolvable. `order` is the
    /// power of t whose matching equation first became inconsistent.
    #[error("Padé table entry is defective: matching equation at order {order} is unsatisfiable")]
    PadeDefect { order: usize },

    /// Series inversion needs a constant term of exactly 1.
    #[error("cannot invert a series whose constant term is {got}, not 1")]
    NonUnitConstant { got: Rational },

    /// A rational function whose denominator vanishes at 0 has no
    /// normalized form and no Maclaurin expansion.
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Float evaluation hit a zero denominator.
    #[error("denominator vanishes at x = {x}")]
    Pole { x: f64 },

    #[error("grids differ; error metrics require identical abscissas")]
    GridMismatch,

    #[error("x = {x} is outside the supported window |x| <= {limit}")]
    OutOfRange { x: f64, limit: f64 },

    #[error("invalid grid: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
