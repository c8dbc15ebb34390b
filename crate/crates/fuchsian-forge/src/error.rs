//! Error type shared across the crate.

use crate::arith::UniPoly;

/// Everything that can go wrong while constructing or checking a realization.
///
/// Contract violations (broken internal invariants) panic instead; every
/// variant here corresponds to a condition a caller can trigger with
/// legitimate inputs.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("the zero polynomial has no roots to isolate")]
    ZeroPolynomial,

    #[error("polynomial is not squarefree")]
    NonSquarefree,

    #[error("no real embedding with the requested index")]
    NoSuchRealEmbedding,

    #[error("cannot invert the zero element")]
    ZeroElement,

    #[error("modulus is reducible: {factor} divides it")]
    ReducibleModulus { factor: UniPoly },

    #[error("equivalence step violates its side condition")]
    IllegalStep,

    #[error("quaternion algebra is not split at the chosen real embedding")]
    NotRealSplit,

    #[error("surface symbol entry vanishes (t^2 = 1 or c = -1)")]
    DegenerateSymbol,

    #[error("parameter direction is singular for the quadric line trick")]
    SingularDirection,

    #[error("a = 1 leaves no room to scale the trace normalization")]
    UnitA,

    #[error("u would vanish: m3*tau + 1 = 0")]
    ZeroU,

    #[error("candidate search exhausted its trial budget")]
    SearchExhausted,

    #[error("g' = 1 is the pole of the involution g = 1 + 2/(g' - 1)")]
    UnitPole,

    #[error("realization budget exhausted at stage: {stage}")]
    BudgetExhausted { stage: String },

    #[error("certificate failed verification: {detail}")]
    InvalidCertificate { detail: String },

    #[error("matrix scale M must be positive")]
    NonpositiveM,

    #[error("unknown export format: {0}")]
    UnknownFormat(String),

    #[error("trace identity violated for word {word}: {detail}")]
    TheoremViolation { word: String, detail: String },

    #[error("matrix identity violated: {0}")]
    IdentityViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
