use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("contract violation in {op}: {detail}")]
    Contract { op: &'static str, detail: String },

    #[error("numeric failure in {op}: {detail}")]
    Numeric { op: &'static str, detail: String },

    #[error("Gram matrix is not positive definite at pivot {pivot} (value {value:e})")]
    Conditioning { pivot: usize, value: f64 },

    #[error("unregistered estimate id `{0}`")]
    UnknownEstimate(String),
}

impl Error {
    /// Name of the failing operation, when the error carries one.
    pub fn operation(&self) -> &str {
        match self {
            Error::Domain(_) => "parameter validation",
            Error::Contract { op, .. } | Error::Numeric { op, .. } => op,
            Error::Conditioning { .. } => "oracle cholesky",
            Error::UnknownEstimate(_) => "diagnostics registry",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
