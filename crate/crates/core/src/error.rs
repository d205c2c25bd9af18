//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not an involution")]
    NotInvolution,
    #[error("subspace is not invariant: image of basis vector {0} leaves the span")]
    NotInvariant(usize),
    #[error("map is not skew-symmetric")]
    NotSkew,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("element is not even")]
    NotEven,
    #[error("unsupported formula: {0}")]
    UnsupportedSpec(String),
    #[error("calibration failed: {0}")]
    CalibrationFailure(String),
    #[error("element does not normalize {0}")]
    NotNormalizing(String),
    #[error("no orbit label for dims (ambient {ambient}, restricted {restricted}) in {group}")]
    UnclassifiedInvolution {
        group: String,
        ambient: usize,
        restricted: usize,
    },
    #[error("operands use incompatible encodings")]
    MixedEncoding,
    #[error("unknown set name: {0}")]
    UnknownName(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
