use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vectors do not extend to a basis of the lattice")]
    NotExtendable,

    #[error("integer overflow while converting a lattice entry")]
    Overflow,

    #[error("ray index {index} out of range (fan has {rays} rays)")]
    RayIndexOutOfRange { index: usize, rays: usize },

    #[error("rays {0} and {1} coincide")]
    DuplicateRay(usize, usize),

    #[error("cone {0} is empty")]
    EmptyCone(usize),

    #[error("invalid fan: {}", .0.join("; "))]
    InvalidFan(Vec<String>),

    #[error("cone is not a face of the fan")]
    NotAFace,

    #[error("cone {0:?} is not a face of cone {1:?}")]
    NotASubface(Vec<usize>, Vec<usize>),

    #[error("maximal cone index {0} out of range")]
    NotMaximal(usize),

    #[error("substituted series has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("series live in different rings ({0})")]
    RingMismatch(&'static str),

    #[error("relation leading coefficient is not a unit: {0}")]
    NonUnitLeadingCoefficient(String),

    #[error("coefficient {0} is not integral")]
    NotIntegral(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
