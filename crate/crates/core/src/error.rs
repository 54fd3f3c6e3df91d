use thiserror::Error;

/// Errors raised by group construction, parsing and the predicates built on them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed cycle notation at offset {offset}: {message}")]
    CycleSyntax { offset: usize, message: String },

    #[error("point {point} out of range 1..={degree} at offset {offset}")]
    PointOutOfRange {
        point: usize,
        degree: usize,
        offset: usize,
    },

    #[error("point {point} repeated at offset {offset}")]
    RepeatedPoint { point: usize, offset: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{what} exceeded the cap of {cap} (reached {reached})")]
    ResourceCap {
        what: &'static str,
        cap: usize,
        reached: usize,
    },

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("subgroup of order {order} is not a {p}-group")]
    NotPGroup { order: u64, p: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("subgroup is not normal in the group")]
    NotNormal,

    #[error("subgroups are not nested")]
    NotNested,

    #[error("the trivial group has no minimal normal subgroups")]
    TrivialGroup,

    #[error("permutation {0} is not an element of the group")]
    NotAnElement(String),

    #[error("invalid semidirect action: {0}")]
    InvalidAction(String),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        match self {
            Error::ResourceCap { .. } => true,
            Error::AtLine { source, .. } => source.is_resource_cap(),
            _ => false,
        }
    }
}
