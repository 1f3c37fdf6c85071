use thiserror::Error;

/// Errors raised by the algebraic, combinatorial and homological operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },
    #[error("operation is undefined for the {0} ideal")]
    DegenerateIdeal(&'static str),
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("no generator has exponent at least 2 in x{0}")]
    NothingToPolarize(usize),
    #[error("polarization record does not match the ideal: {0}")]
    InconsistentRecord(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("operation is undefined for the void complex")]
    VoidComplex,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("Taylor complex on {count} generators exceeds the bound {bound}")]
    GeneratorBound { count: usize, bound: usize },
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("associated primes are not pairwise incomparable")]
    ComparablePrimes,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
