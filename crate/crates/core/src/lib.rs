//! Exact arithmetic for multigraded polynomial rings: integer lattices and
//! finitely generated abelian groups, rational polyhedral cones, gradings,
//! multihomogeneous spectra as torus embeddings, and the chamber
//! decomposition of the degree cone.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere. All values are immutable after
//! construction and all operations are pure functions, so they can be used
//! freely from concurrent callers.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod chambers;
pub mod cones;
pub mod error;
pub mod grading;
pub mod lattice;
pub mod proj;

mod linalg;

pub use error::Error;

/// Size limits for the enumerative operations. Exceeding a limit is reported
/// as [`Error::LimitExceeded`], never as silent truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Variable count bound for square-free enumeration (2^k subsets).
    pub max_vars: usize,
    /// Chart count bound for maximal separated subcollections.
    pub max_charts: usize,
    /// Free-rank bound for chamber enumeration.
    pub max_chamber_rank: usize,
    /// Variable count bound for chamber enumeration.
    pub max_chamber_vars: usize,
    /// Bound on lattice points enumerated per parallelepiped in a Hilbert
    /// basis computation.
    pub max_hilbert_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vars: 20,
            max_charts: 25,
            max_chamber_rank: 6,
            max_chamber_vars: 12,
            max_hilbert_points: 1 << 20,
        }
    }
}
