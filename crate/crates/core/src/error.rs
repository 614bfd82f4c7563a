use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the CLI exit codes: `Parse` and `Domain` map to
/// 1, `NotMember` to 2 and `Consistency` to 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("coefficient of x^{index} ({coefficient}) is not {p}-integral")]
    NotIntegral {
        index: usize,
        coefficient: String,
        p: String,
    },
    #[error("not a member of the family: {0}")]
    NotMember(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
