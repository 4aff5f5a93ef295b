use thiserror::Error;

use crate::schur::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term")]
    ZeroConstantTerm,

    #[error("insufficient precision: need order {needed}, have {available}")]
    InsufficientPrecision { needed: usize, available: usize },

    /// A rectangle Schur function used as a normalizer vanishes.
    #[error("non-generic alphabet: {vanishing} vanishes")]
    NonGeneric { vanishing: SchurLabel },

    /// The division hit a zero `beta` at the given step.
    #[error("division terminated at step {step}")]
    Terminated { step: usize },

    #[error("singular linear system")]
    SingularSystem,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn non_generic(p: Partition) -> Self {
        Error::NonGeneric { vanishing: SchurLabel(p) }
    }

    pub fn signal_name(&self) -> &'static str {
        match self {
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::InsufficientPrecision { .. } => "InsufficientPrecision",
            Error::NonGeneric { .. } => "NonGeneric",
            Error::Terminated { .. } => "Terminated",
            Error::SingularSystem => "SingularSystem",
            Error::Parse { .. } => "ParseError",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

/// Renders a partition as a Schur function name, e.g. `S_(4,4,4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurLabel(pub Partition);

impl std::fmt::Display for SchurLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S_({})", self.0)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
