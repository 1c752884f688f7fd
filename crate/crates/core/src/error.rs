use thiserror::Error;

/// Errors raised by the covering, braid and enumeration routines.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid transposition ({a} {b}) on {degree} sheets")]
    InvalidTransposition { a: u32, b: u32, degree: u32 },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("invalid cycle type {parts:?} for degree {degree}")]
    InvalidCycleType { parts: Vec<u32>, degree: u32 },
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i32, strands: usize },
    #[error("strand count mismatch: expected {expected}, found {found}")]
    StrandMismatch { expected: usize, found: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("covering is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("no connected covering of degree {degree} with {branch_points} branch points has total monodromy of type {omega:?}")]
    NotRealizable {
        degree: u32,
        branch_points: usize,
        omega: Vec<u32>,
    },
    #[error("invalid restriction: {0}")]
    InvalidRestriction(String),
    #[error("invalid curve or interval: {0}")]
    InvalidCurve(String),
    #[error("invalid index pattern: {0}")]
    InvalidIndexPattern(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("enumeration exceeded cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("coset enumeration inconclusive after {max_cosets} cosets")]
    Inconclusive { max_cosets: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
