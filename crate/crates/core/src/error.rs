use thiserror::Error;

/// Errors produced by construction, evaluation, and solver routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid interval: endpoints must be finite with a < b (got a={a}, b={b})")]
    InvalidInterval { a: f64, b: f64 },

    #[error("sample at node {index} (x={x}) is not finite")]
    NonFiniteSample { index: usize, x: f64 },

    #[error("x={x} lies outside [{a}, {b}]")]
    OutOfDomain { x: f64, a: f64, b: f64 },

    #[error("derivative order {order} exceeds the supported cap {cap}")]
    OrderTooHigh { order: usize, cap: usize },

    #[error("integrand exponent must satisfy p >= 1 (got {p})")]
    InvalidExponent { p: f64 },

    #[error("trace jet order must satisfy 1 <= m <= {cap} (got {m})")]
    InvalidJetOrder { m: usize, cap: usize },

    #[error("higher-order trace certificate requires 2 <= m <= 4 (got {m})")]
    JetCertificateOrder { m: usize },

    #[error("grid must have at least {min} points (got {n})")]
    GridTooSmall { n: usize, min: usize },

    #[error("matrix is not positive definite (pivot {pivot} at row {row})")]
    NotPositiveDefinite { row: usize, pivot: f64 },

    #[error("eigensolver did not converge after {iterations} iterations (last value {last})")]
    NoConvergence { iterations: usize, last: f64 },

    #[error("invalid function descriptor: {0}")]
    Descriptor(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
