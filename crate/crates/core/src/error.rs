use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("not invertible as a power series: zero constant term")]
    NotInvertible,

    #[error("coefficient index {index} exceeds series order {order}")]
    IndexBeyondOrder { index: usize, order: usize },

    #[error("index {index} exceeds total degree {total_degree}")]
    IndexBeyondDegree { index: usize, total_degree: usize },

    #[error("arity mismatch: expected {expected}, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },

    #[error("oracle restricted to desk scale (n <= {max_n}, k <= {max_k}); got n = {n}, k = {k}")]
    DeskScale { n: usize, k: usize, max_n: usize, max_k: usize },

    #[error("expansion exceeds term limit of {0}")]
    TermLimit(usize),

    #[error("alpha and r lengths differ: {alpha} vs {r}")]
    LengthMismatch { alpha: usize, r: usize },

    #[error("r entries must be >= 1 (found {value} at position {index})")]
    NonPositiveMultiplicity { index: usize, value: i64 },

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("order k must be >= 1")]
    ZeroOrder,

    #[error("generalized Changhee numbers need every r_i = 1 (r_{index} = {value})")]
    NotSimple { index: usize, value: u32 },

    #[error("unknown suite {name:?}; valid suites: {valid}")]
    UnknownSuite { name: String, valid: String },

    #[error("unknown family {name:?}; valid families: {valid}")]
    UnknownFamily { name: String, valid: String },

    #[error("unknown special case {0:?}; expected 2.case1..2.case8 or 3.case1..3.case8")]
    UnknownCase(String),

    #[error("special case {case} is missing parameter {param}")]
    MissingCaseParam { case: String, param: &'static str },

    #[error("family {0} requires a parameter file")]
    MissingSpec(String),

    #[error("invalid triangle cache: {0}")]
    Cache(String),

    #[error("invalid parameter file: {0}")]
    Params(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
