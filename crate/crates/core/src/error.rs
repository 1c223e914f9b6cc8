use thiserror::Error;

use crate::numeric::DimSig;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FtrError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch {
        left: Box<DimSig>,
        right: Box<DimSig>,
    },

    #[error("non-integer power of a negative base")]
    NegativeBase,

    #[error("missing constant `{0}`")]
    MissingConstant(String),

    #[error("duplicate constant `{0}`")]
    DuplicateName(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("non-positive input: {0}")]
    NonPositiveInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("singular: {0}")]
    Singular(String),

    #[error("function is zero at the evaluation point")]
    ZeroFunction,

    #[error("function is not oscillatory at the evaluation point")]
    NonOscillatory,

    #[error("sample grids do not match")]
    GridMismatch,

    #[error("commutator of an axis with itself")]
    SameAxis,

    #[error("matrix is not hermitian")]
    NotHermitian,

    #[error("state is not normalized")]
    NotNormalized,

    #[error("dimension-index must be non-zero")]
    ZeroL,

    #[error("multiplicity must be non-zero")]
    ZeroMultiplicity,

    #[error("multiplicity must be positive")]
    NonPositiveMultiplicity,

    #[error("quadratic has complex roots")]
    ComplexRoots,

    #[error("unknown quantity class `{0}`")]
    UnknownClass(String),

    #[error("permutation does not respect mates")]
    NotMateRespecting,

    #[error("configuration error: {0}")]
    Config(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, FtrError>;
