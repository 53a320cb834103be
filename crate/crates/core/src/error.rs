use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("generators are not coprime (gcd = {0})")]
    NotCoprime(i64),
    #[error("{0} is not a positive element of the semigroup")]
    NotInSemigroup(i64),
    #[error("monomials have {left} and {right} variables")]
    DimensionMismatch { left: usize, right: usize },
    #[error("binomial {0} is not homogeneous for the semigroup grading")]
    NotHomogeneous(String),
    #[error("generating set is not certified: {0}")]
    NotCertified(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("embedding dimension {0} has no closed forms (supported: 4, 5)")]
    UnsupportedE(usize),
    #[error("operation requires e = {expected}, got e = {actual}")]
    WrongE { expected: usize, actual: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family generators are not minimal: {0:?}")]
    NotMinimal(Vec<i64>),
}
