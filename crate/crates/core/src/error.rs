use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("q = {0} is not a supported prime modulus")]
    InvalidModulus(u32),
    #[error("field mismatch: GF({left}) vs GF({right})")]
    Mismatch { left: u32, right: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cyclic word length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no cyclic simplex generator found for q = {q}, k = {k}")]
    NoGenerators { q: u32, k: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid shape: {0}")]
    Shape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("generator matrix has no nonzero row")]
    ZeroMatrix,
    #[error("{size} codewords exceed the enumeration guard of {guard}; too large to enumerate")]
    TooLarge { size: u128, guard: u64 },
    #[error("operation requires a binary code, got GF({0})")]
    NotBinary(u32),
    #[error("Grey-Rankin bound inapplicable: n - (n - 2d)^2 = {0} is not positive")]
    BoundInapplicable(i128),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("invalid multiplier set: {0}")]
    Multipliers(String),
    #[error("g1 is not a cyclic simplex generator: {0}")]
    InvalidGenerator(String),
    #[error("verification failed: {0}")]
    Verification(String),
}
