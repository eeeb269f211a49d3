use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two maps (or a map and an object) do not fit together.
    #[error("shape error: {0}")]
    Shape(String),

    #[error("field error: {0}")]
    Field(String),

    #[error("matrix is not invertible (rank {rank} of {size})")]
    NotInvertible { rank: usize, size: usize },

    #[error("convolution inverse does not exist: {0}")]
    NotConvolutionInvertible(String),

    #[error("convolution inverse is not unique ({nullity} free parameters)")]
    ConvolutionInverseNotUnique { nullity: usize },

    /// A construction refused to build because its input failed validation.
    #[error("{what} failed validation:\n{report}")]
    Validation {
        what: String,
        report: Box<ValidationReport>,
    },

    /// The multiplication map of a claimed factorization (or the
    /// comultiplication map of a cofactorization) is not invertible.
    #[error("not a factorization: {0}")]
    NotFactorization(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn validation(what: impl Into<String>, report: ValidationReport) -> Self {
        Error::Validation {
            what: what.into(),
            report: Box::new(report),
        }
    }
}
