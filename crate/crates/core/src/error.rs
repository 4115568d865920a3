use thiserror::Error;

use crate::fgab::InvariantFactors;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix does not send the relations of its source into the relations
    /// of its target.
    #[error("IllFormedMap: {0}")]
    IllFormedMap(String),

    #[error("TorsionInDegreeZero: degree-0 group has torsion {0}; use the resolution route")]
    TorsionInDegreeZero(InvariantFactors),

    #[error("NotSurjective: {0}")]
    NotSurjective(String),

    #[error("InvalidRootDatum: {0}")]
    InvalidRootDatum(String),

    #[error("NotAnEmbedding: {0}")]
    NotAnEmbedding(String),

    #[error("NotApplicable: {0}")]
    NotApplicable(String),

    #[error("PicNonTrivial: Pic(G) = {0}")]
    PicNonTrivial(InvariantFactors),

    #[error("HNotConnected: the stabilizer H is not connected")]
    HNotConnected,

    #[error("HKerCharNotConnected: H^ker.char is not known to be connected")]
    HKerCharNotConnected,

    /// Two independent computations of the same group disagree. This is a
    /// bug in the library, never a property of the input.
    #[error("InternalDisagreement: {0}")]
    InternalDisagreement(String),

    #[error("UnknownName: {0}")]
    UnknownName(String),

    #[error("BadParams: {0}")]
    BadParams(String),

    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Hypothesis-gate failures: the input is valid but the requested theorem
    /// does not apply to it.
    pub fn is_gate_failure(&self) -> bool {
        matches!(
            self,
            Error::PicNonTrivial(_) | Error::HNotConnected | Error::HKerCharNotConnected
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::IllFormedMap(_) => "IllFormedMap",
            Error::TorsionInDegreeZero(_) => "TorsionInDegreeZero",
            Error::NotSurjective(_) => "NotSurjective",
            Error::InvalidRootDatum(_) => "InvalidRootDatum",
            Error::NotAnEmbedding(_) => "NotAnEmbedding",
            Error::NotApplicable(_) => "NotApplicable",
            Error::PicNonTrivial(_) => "PicNonTrivial",
            Error::HNotConnected => "HNotConnected",
            Error::HKerCharNotConnected => "HKerCharNotConnected",
            Error::InternalDisagreement(_) => "InternalDisagreement",
            Error::UnknownName(_) => "UnknownName",
            Error::BadParams(_) => "BadParams",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
