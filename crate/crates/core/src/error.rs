use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u32),
    #[error("modulus {modulus} is reducible over GF({p})")]
    ReducibleModulus { modulus: String, p: u32 },
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("field of order {p}^{e} exceeds the supported size 2^16")]
    UnsupportedSize { p: u32, e: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {rep} does not belong to a field of order {q}")]
    FieldMismatch { rep: u32, q: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("subspaces are not nested")]
    NotNested,
    #[error("U \\ V is empty")]
    EmptyDifference,
    #[error("chains have different dimension profiles")]
    ProfileMismatch,
    #[error("replacement is not strictly between its neighbours")]
    NotBetween,
    #[error("index {index} out of range for length {len}")]
    BadIndex { index: usize, len: usize },
    #[error("not a chain: {0}")]
    NotAChain(String),
    #[error("empty facet list")]
    Empty,
    #[error("complex is not pure")]
    NotPure,
    #[error(
        "facets containing the minimum vector are not a prefix of the order (facet {0} breaks it)"
    )]
    NotPrefix(usize),
    #[error("shelling property broken at stage {0}")]
    ShellingBroken(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("method unavailable: {0}")]
    MethodUnavailable(String),
    #[error("unknown id {0:?}")]
    UnknownId(String),
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
