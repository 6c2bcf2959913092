use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector is not contained in the span of the ambient basis")]
    NotInSpan,

    #[error("left-normed bracket needs at least two arguments, got {0}")]
    BracketTooShort(usize),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("weight {k} is not an odd integer in 5..={max}")]
    WeightOutOfRange { k: usize, max: usize },

    #[error("closed-form p-power requested on an algebra that is not m0^lambda(p)")]
    NotM0Lambda,

    #[error("2-cochain is not a cocycle: d2 is nonzero on e_{0}, e_{1}, e_{2}")]
    NotCocycle(usize, usize, usize),

    #[error("restricted 2-cochain is not a cocycle: {0}")]
    NotRestrictedCocycle(String),

    #[error("scale factors must be nonzero")]
    ZeroScale,

    #[error("brute-force isomorphism search is limited to p <= {limit}, got {p}")]
    SearchLimit { p: u32, limit: u32 },

    #[error("invalid algebra description: {0}")]
    InvalidAlgebra(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
