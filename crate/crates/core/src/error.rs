//! Error type shared by every layer of the engine.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in Q(q)")]
    DivisionByZero,

    #[error("bad arity: {0}")]
    BadArity(String),

    #[error("arity mismatch between operands ({0} vs {1})")]
    ArityMismatch(usize, usize),

    #[error("index map is not injective")]
    NonInjectiveMap,

    #[error("operator is not invertible: {0}")]
    NotInvertible(String),

    #[error("formal trace diverges on slot {slot}: diagonal entry 1")]
    TraceDiverges { slot: usize },

    #[error("formal trace on slot {slot} leaves the monomial operator class")]
    NonMonomialTrace { slot: usize },

    #[error("psi series requires a parameter monomial of degree >= 1")]
    ZeroParamMonomial,

    #[error("parameter lists differ")]
    ParamMismatch,

    #[error("substitution decreases degree of parameter `{0}`")]
    DegreeDecreasing(String),

    #[error("series coefficient carries no consistent integral grading")]
    UngradedTerm,

    #[error("bad index: {0}")]
    BadIndex(String),

    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("operator has no expression form: {0}")]
    NotRenderable(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
