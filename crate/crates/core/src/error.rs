use thiserror::Error;

/// Errors produced by the series engine, the catalog and the verification drivers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the unit disk domain")]
    Domain { what: &'static str, value: f64 },

    #[error("area ratio {value} is not below 1; S_r/(pi - S_r) is undefined")]
    SingularInput { value: f64 },

    #[error("functional `{id}` expects a {expected} subject")]
    KindMismatch {
        id: &'static str,
        expected: &'static str,
    },

    #[error("functional `{id}` requires parameter `{param}`")]
    MissingParam { id: String, param: &'static str },

    #[error("functional `{id}` does not take parameter `{param}`")]
    UnexpectedParam { id: String, param: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("truncation order {order} exceeds the policy limit {max_order}")]
    TruncationLimit { order: usize, max_order: usize },

    #[error("declared tail bound {bound:e} exceeds tolerance {tol:e} at radius {r}")]
    TailTooLarge { bound: f64, tol: f64, r: f64 },

    #[error(
        "harmonic pair violates the dilatation coefficient bound at r = {r} (margin {margin:e})"
    )]
    DilatationViolated { r: f64, margin: f64 },

    #[error("unknown identifier `{0}`")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
