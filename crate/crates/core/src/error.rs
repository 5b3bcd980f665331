use thiserror::Error;

/// Errors raised by the algebra, series and CLI layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot combine generators of family {left} with family {right}")]
    FamilyMismatch { left: String, right: String },

    #[error("no substitution image for generator {0}")]
    MissingImage(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} = {requested} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not unital (leading coefficient is {0}, expected 1)")]
    NotUnital(String),

    #[error("malformed input in field `{field}`: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
