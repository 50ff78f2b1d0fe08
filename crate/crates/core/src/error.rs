use thiserror::Error;

use crate::arith::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown constant `{0}`")]
    UnknownConstant(String),

    #[error("requested comparison up to q^({requested}) but a series is only known below q^({available})")]
    InsufficientOrder { requested: Rat, available: Rat },

    #[error("series has no terms below its truncation order")]
    EmptySeries,

    #[error("leading coefficient must be 1 to take a root, found {0}")]
    LeadingCoefficientNotOne(String),

    #[error("exponent must be positive, got {0}")]
    NonPositiveExponent(Rat),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("coefficient is outside the rational field; evaluate over Q(beta) instead")]
    RingMismatch,

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("continued fraction tail vanished at depth {depth}")]
    ContinuedFractionBreakdown { depth: usize },

    #[error("sample rejected: {0}")]
    SampleRejected(String),

    #[error("config: {0}")]
    Config(String),
}
