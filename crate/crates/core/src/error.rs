use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("ideal not admissible within cap L = {0}")]
    NotAdmissible(usize),

    #[error("resource cap exceeded: {0}")]
    Cap(String),

    #[error("decomposition inconclusive: {0}")]
    Inconclusive(String),

    #[error("p too small for radical computation: p = {p}, need p > {required}")]
    FieldTooSmall { p: u32, required: usize },

    #[error("partial enumeration: {0}")]
    Partial(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }

    /// Process exit code used by the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Input(_) | Error::NotAdmissible(_) => 2,
            Error::FieldTooSmall { .. } => 2,
            Error::Cap(_) | Error::Partial(_) => 3,
            Error::Inconclusive(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
