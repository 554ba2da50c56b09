use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Some subset of bars ties with its complement, so the vector lies on a
    /// wall between chambers. The payload names one tying subset (1-based
    /// indices).
    #[error("length vector is not generic: subset {{{0}}} ties with its complement")]
    NonGeneric(String),

    /// The operation requires an ascending length vector.
    #[error("length vector must be ordered (ascending)")]
    NotOrdered,

    /// Two length vectors of different lengths were compared.
    #[error("length vectors have {0} and {1} bars; expected equal lengths")]
    DimensionMismatch(usize, usize),

    /// A parameter is outside the supported range.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// The chamber is not special, but the operation only applies to
    /// special chambers.
    #[error("chamber is not special")]
    NotSpecial,

    /// The polygon space is empty.
    #[error("polygon space is empty")]
    EmptySpace,

    /// The polygon space is disconnected; the operation needs a connected
    /// space.
    #[error("polygon space is disconnected")]
    Disconnected,

    /// The chamber type is outside the domain of the operation.
    #[error("wrong chamber type: {0}")]
    WrongType(String),

    /// No generic length vector realizes the requested signature.
    #[error("no chamber realizes the requested genetic code")]
    Unrealizable,

    /// A genetic code must be an antichain of pairwise incomparable sets.
    #[error("invalid antichain: {0}")]
    InvalidAntichain(String),

    /// Malformed input (parse errors, non-positive lengths, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
