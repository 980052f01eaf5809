use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("characteristic {0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("ideal `{0}` is declared twice")]
    DuplicateIdeal(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("ideal is not homogeneous")]
    NonHomogeneous,
    #[error("monomial order `{0}` is not graded")]
    NonGradedOrder(String),
    #[error("too many generators for subset enumeration: {generators} generators, {subsets} subsets")]
    TooManyGenerators { generators: usize, subsets: u128 },
    #[error("homological index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("regularity of the zero ideal is undefined")]
    ZeroIdealRegularity,
    #[error("weight vector {0:?} does not select the leading terms of the basis")]
    InvalidWeight(Vec<u64>),
    #[error("no positive weight vector selects the leading terms of the basis")]
    WeightInfeasible,
    #[error("weight vector entry {0} exceeds the search bound {1}")]
    WeightBoundExceeded(String, u64),
}
