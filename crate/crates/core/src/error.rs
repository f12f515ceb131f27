use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Inapplicable theorem hypotheses are *not* errors; they are carried by
/// [`crate::theorems::TheoremVerdict`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("index error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Index {
        line: Option<usize>,
        message: String,
    },

    #[error("{0} is not a prime")]
    NonPrime(u32),

    #[error("prime {0} is not supported (expected 2, 3 or 5)")]
    UnsupportedPrime(u32),

    #[error("inconsistent presentation `{name}`: {message}")]
    InconsistentPresentation { name: String, message: String },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not abelian")]
    NotAbelian,

    #[error("group is not regular")]
    NotRegular,

    #[error("group is not purely non-abelian")]
    NotPurelyNonabelian,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("scope exceeded: {what} ({actual} > {limit})")]
    ScopeExceeded {
        what: &'static str,
        actual: u64,
        limit: u64,
    },

    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("catalog entry `{name}`: expected {key} = {expected}, found {found}")]
    ExpectationFailed {
        name: String,
        key: String,
        expected: String,
        found: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl std::fmt::Display, err: std::io::Error) -> Self {
        Error::Io {
            path: path.to_string(),
            message: err.to_string(),
        }
    }
}
