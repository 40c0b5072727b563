use thiserror::Error;

/// Errors raised by constructors, bijections and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a signed permutation: {0}")]
    InvalidSignedPermutation(String),
    #[error("not an involution: {0}")]
    NotInvolution(String),
    #[error("not centrosymmetric: {0}")]
    NotCentrosymmetric(String),
    #[error("contains the pattern 321: {0}")]
    Contains321(String),
    #[error("expected size {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("expected an even size, got {0}")]
    OddSize(usize),
    #[error("expected an odd size, got {0}")]
    EvenSize(usize),
    #[error("middle entry of {0} is not fixed")]
    MiddleNotFixed(String),
    #[error("{fp} fixed points, need at least {required}")]
    TooFewFixedPoints { fp: usize, required: usize },
    #[error("shape mismatch: path {path} does not lie in R_{{{a},{b}}}")]
    ShapeMismatch { path: String, a: usize, b: usize },
    #[error("rectangle R_{{{a},{b}}} needs b >= a")]
    RectangleOrder { a: usize, b: usize },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("fixed-point count {l} has the wrong parity for size {n}")]
    Parity { n: usize, l: usize },
    #[error("statistic transport failed: {0}")]
    TransportMismatch(String),
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("unknown statistic `{0}`")]
    UnknownStat(String),
    #[error("statistic `{stat}` is not defined on class `{class}`")]
    IncompatibleStat { class: String, stat: String },
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("unknown bijection `{0}`")]
    UnknownBijection(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
