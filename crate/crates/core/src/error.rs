use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("extension degree m = {0} is outside the supported range 2..=20")]
    DegreeOutOfRange(u32),
    #[error("discrete log of the zero element is undefined")]
    LogOfZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial does not divide x^{n} + 1")]
    NotADivisor { n: usize },
    #[error("set is not closed under doubling mod {n}: {member} present but {double} missing")]
    NotClosed { n: usize, member: usize, double: usize },
    #[error("minimal polynomial coefficient outside GF(2) for coset led by {leader}")]
    CoefficientNotBinary { leader: usize },
    #[error("invalid weight-class spec: {0}")]
    InvalidSpec(String),
    #[error("spec is not duadic: {0}")]
    NotDuadic(String),
    #[error("{v} is not a unit mod {n}")]
    NotAUnit { v: usize, n: usize },
    #[error("lemma hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("r = {0} exceeds the exhaustive catalog budget (even r <= 16)")]
    CatalogBudget(u32),
    #[error("dimension k = {k} exceeds the enumeration budget of {budget}")]
    EnumerationBudget { k: usize, budget: usize },
    #[error("the code has dimension 0 and no nonzero codeword")]
    ZeroDimension,
    #[error("n = {0} is too small for the square-root bound (need odd n >= 3)")]
    LengthTooSmall(usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
