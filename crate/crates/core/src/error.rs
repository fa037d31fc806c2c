use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set of size {0} exceeds the 64-element cap")]
    GroundTooLarge(usize),

    #[error("subset {subset:?} is not contained in a ground set of size {n}")]
    OutOfRange { subset: Vec<usize>, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a matroid: {0}")]
    NotAMatroid(String),

    #[error("zero ideal: the matroid has no bases")]
    ZeroIdeal,

    #[error("not a cactus: {0}")]
    NotACactus(String),

    #[error("not a cactus Betti vector: {0}")]
    NotCactusBetti(String),

    #[error("dual has no circuits; d_1 undefined")]
    DualIsFree,

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
