use thiserror::Error;

/// Errors raised by the polynomial, root, order and contraction routines.
///
/// Numeric payloads are carried as `f64` regardless of the scalar type the
/// failing routine was instantiated with.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree error: {0}")]
    Degree(String),

    #[error("parameter outside its domain: {0}")]
    ParameterDomain(String),

    #[error("root solver did not converge (best residual {best_residual:e})")]
    RootSolve { best_residual: f64 },

    #[error("polynomial is not hyperbolic: root {re} {im:+}i lies off the real axis")]
    NotHyperbolic { re: f64, im: f64 },

    #[error("trajectory labels ambiguous near lambda = {lambda}")]
    LabelAmbiguity { lambda: f64 },

    #[error("root velocity undefined at x = {x} (denominator {denominator:e})")]
    SingularVelocity { x: f64, denominator: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },

    #[error("first tuple is not majorized by the second")]
    NotMajorized,

    #[error("simplex exceeded its iteration guard ({iterations} pivots)")]
    SolverStall { iterations: usize },

    #[error("matrix is not doubly stochastic: {0}")]
    NotDoublyStochastic(String),

    #[error("invalid contraction: {0}")]
    InvalidContraction(String),

    #[error("multiset has repeated entries; strictify it or allow degenerate steps")]
    MultipleRoots,

    #[error("contraction chain exceeded the step cap of {cap}")]
    StepCapExceeded { cap: usize },

    #[error("unknown suite '{0}'")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
