use thiserror::Error;

use crate::parse::ParseError;

/// Broad classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed or mathematically invalid input.
    Validation,
    /// A search or size bound was exhausted.
    Resource,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {p} exceeds the supported bound {max}")]
    PrimeTooLarge { p: u64, max: u64 },
    #[error("extension degree {n} outside 1..={max}")]
    DegreeOutOfRange { n: usize, max: usize },
    #[error("incompatible fields: {0}")]
    Incompatible(String),
    #[error("operands live over different bases: {0} vs {1}")]
    BaseMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("leading coefficient {0} is not a unit")]
    NonUnitLeading(String),
    #[error("operation needs a field base, got {0}")]
    NotAField(String),
    #[error("module is not unit (its matrix is singular)")]
    NotUnit,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(
        "splitting degree exceeds the cap {max}; {partial_count} roots found over degree {searched}"
    )]
    SplittingDegreeExceeded {
        max: usize,
        searched: usize,
        partial_count: u64,
    },
    #[error("no solution found up to extension degree {reached}")]
    LangDegreeExceeded { reached: usize },
    #[error("ghost components need a torsion-free coefficient ring, got {0}")]
    TorsionRing(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::DegreeOutOfRange { n, .. } if *n == 0 => ErrorClass::Validation,
            Error::DegreeOutOfRange { .. }
            | Error::PrimeTooLarge { .. }
            | Error::SplittingDegreeExceeded { .. }
            | Error::LangDegreeExceeded { .. }
            | Error::ResourceLimit(_) => ErrorClass::Resource,
            _ => ErrorClass::Validation,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
