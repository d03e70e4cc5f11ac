use thiserror::Error;

/// Errors raised by the algebra, topology and pairing routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("expected {expected} items, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("target degree {target} is below the degree {degree} of the polynomial")]
    DegreeTooSmall { target: i64, degree: i64 },
    #[error("variable sets overlap: {0}")]
    OverlappingVariables(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("substitution does not respect the variable weights")]
    WeightIncompatible,
    #[error("input is not (weighted) homogeneous")]
    NotHomogeneous,
    #[error("Groebner computation aborted at degree cap {0}")]
    DegreeCap(i64),
    #[error("wrong dimension of the zero locus: expected {expected}, found {found}; {hint}")]
    WrongDimension {
        expected: usize,
        found: usize,
        hint: String,
    },
    #[error("degree window too small: {0}")]
    WindowTooSmall(String),
    #[error("socle check failed: {0}")]
    SocleCheckFailed(String),
    #[error("no regular sequence found: {0}")]
    RegularSequence(String),
    #[error("chain map lift failed: {0}")]
    LiftFailed(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("polynomial has odd degree {0}; the sign is not defined on the projective plane")]
    OddDegree(i64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
