use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter 0 is not allowed; letters are positive integers")]
    ZeroLetter,
    #[error("invalid pattern `{0}`: patterns are nonempty reduced words over {{1,2}}")]
    InvalidPattern(String),
    #[error("undefined maximum: the word is empty")]
    EmptyWord,
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("label {0} is not a vertex of the graph")]
    UnknownLabel(u32),
    #[error("label {0} is already a vertex of the graph")]
    LabelClash(u32),
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(u32, u32),
    #[error("graph must be labeled by 1..n")]
    NotOnInitialSegment,
    #[error("graph has {n} vertices, which exceeds the {what} bound of {bound}")]
    TooLarge {
        what: &'static str,
        n: usize,
        bound: usize,
    },
    #[error("the graph is not a tree")]
    NotATree,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("the word does not {pattern}-represent the graph")]
    NotARepresentation { pattern: String },
    #[error("construction produced a word that does not represent its target graph")]
    SelfCheckFailed,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn too_large(what: &'static str, n: usize, bound: usize) -> Self {
        Error::TooLarge { what, n, bound }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
