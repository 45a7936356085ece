use thiserror::Error;

use crate::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature ({p},{q}): need 1 <= p+q <= {max}")]
    InvalidSignature { p: usize, q: usize, max: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("expected {expected} coefficients, found {found}")]
    CoefficientCount { expected: usize, found: usize },

    #[error("grade {grade} out of range for n = {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("generator index {index} out of range for n = {dim}")]
    GeneratorOutOfRange { index: usize, dim: usize },

    #[error("blade indices must be strictly increasing: {0:?}")]
    UnorderedBlade(Vec<usize>),

    #[error("conjugation signs must be +1 or -1 and cover at most 13 grades")]
    InvalidConjugationSigns,

    #[error("element is singular (Det = 0)")]
    SingularElement,

    #[error("{operation} is not available for n = {dim}")]
    UnsupportedDimension { operation: &'static str, dim: usize },

    #[error("generator form for n = {dim} takes {expected} arguments, got {found}")]
    ArityMismatch {
        dim: usize,
        expected: usize,
        found: usize,
    },

    #[error("coefficient C({k}) has a non-scalar part")]
    NonScalarCoefficient { k: usize },

    #[error("element does not satisfy <U>_0 = 0 and U^2 scalar")]
    NotInvolutoryLike,

    #[error("element is not a rotor")]
    NotARotor,

    #[error("matrix characteristic coefficient c({k}) has nonzero imaginary part")]
    ComplexCoefficient { k: usize },

    #[error("matrix of size {found} does not match representation size {expected}")]
    MatrixSize { expected: usize, found: usize },

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
