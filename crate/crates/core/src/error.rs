use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Parameters fall outside the range a family is known to exist for.
    #[error("unsupported parameters for {family}: {reason}")]
    UnsupportedParameters { family: String, reason: String },

    /// A builder produced a graph that failed its own post-verification.
    #[error("construction discrepancy in {family}: {detail} (certificate {certificate:?})")]
    ConstructionDiscrepancy {
        family: String,
        detail: String,
        certificate: Vec<usize>,
    },

    #[error("table discrepancy: {0}")]
    TableDiscrepancy(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn unsupported(family: &str, reason: impl Into<String>) -> Self {
        Error::UnsupportedParameters {
            family: family.to_string(),
            reason: reason.into(),
        }
    }
}
