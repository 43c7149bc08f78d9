use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unsupported prime {0}: tame hypothesis p>3 required")]
    UnsupportedPrime(u64),

    #[error("cannot parse rational from {0:?}")]
    Parse(String),

    #[error("scaling factor must be nonzero")]
    ZeroScale,

    #[error("diagonal transform has zero determinant")]
    ZeroDeterminant,

    #[error("invariant tuple is identically zero")]
    ZeroTuple,

    #[error("singular invariants: discriminant vanishes")]
    Singular,

    #[error("special Ciani curve: conductor not covered by this method")]
    Special,

    #[error("I3 vanishes: weighted projective comparison is only supported for I3 != 0")]
    VanishingI3,

    #[error("valuations do not satisfy the hyperelliptic profile")]
    ProfileMismatch,

    #[error("operands live in different splitting algebras")]
    MixedAlgebras,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("reconstruction check failed for {invariant}: {detail}")]
    Verification { invariant: &'static str, detail: String },

    #[error("coefficient {index} of the descended model is not rational")]
    NonRationalCoefficient { index: usize },

    #[error("cluster refinement did not terminate within depth {0}")]
    RefinementExhausted(usize),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn verification(invariant: &'static str, expected: &Rational, got: &str) -> Self {
        Error::Verification {
            invariant,
            detail: format!("expected {expected}, got {got}"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
