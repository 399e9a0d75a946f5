//! Error type shared by all modules.

use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A vector or matrix had the wrong dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// A homomorphism was applied to or composed with the wrong group.
    GroupMismatch,
    /// A homomorphism does not kill the order of a torsion generator.
    TorsionIllDefined,
    /// A monomial exponent was negative.
    NegativeExponent,
    /// Hilbert bases exist for pointed cones only.
    NotPointed,
    /// The support does not index a relevant square-free monomial.
    IrrelevantSupport,
    /// Regrading homomorphisms must be surjective onto the target free part.
    NotSurjective,
    /// Chamber operations need a full-dimensional degree cone.
    DegenerateDegreeCone,
    /// The queried class lies outside the degree cone.
    OutsideDegreeCone,
    /// The queried class lies on a wall; carries the incident chamber
    /// indices in the enumeration order of the chamber fan.
    OnWall { incident: Vec<usize> },
    /// An enumeration exceeded a configured size limit.
    LimitExceeded {
        what: &'static str,
        limit: usize,
        needed: usize,
    },
    /// Malformed argument described by the message.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::GroupMismatch => write!(f, "abelian group mismatch"),
            Error::TorsionIllDefined => {
                write!(f, "homomorphism is not well-defined on torsion")
            }
            Error::NegativeExponent => write!(f, "monomial exponents must be nonnegative"),
            Error::NotPointed => write!(f, "cone is not pointed"),
            Error::IrrelevantSupport => write!(f, "support is not relevant"),
            Error::NotSurjective => {
                write!(f, "regrading is not surjective onto the target free part")
            }
            Error::DegenerateDegreeCone => {
                write!(f, "degree cone is not full-dimensional")
            }
            Error::OutsideDegreeCone => write!(f, "class lies outside the degree cone"),
            Error::OnWall { incident } => {
                write!(f, "class lies on a wall incident to chambers {incident:?}")
            }
            Error::LimitExceeded {
                what,
                limit,
                needed,
            } => write!(f, "limit exceeded for {what}: needed {needed}, limit {limit}"),
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}
