//! Finitely presented rings of characteristic p: finite algebras with an
//! enumerable basis and graded quotients with degree-piece extraction.

mod finite;
mod graded;

use thiserror::Error;

use crate::arith::PolyError;

pub use finite::{
    irreducible_poly, Elem, FiniteAlgebra, MaximalIdeal, Reducedness, DEFAULT_DIM_CAP,
    FIELD_GENERATOR,
};
pub use graded::{hypersurface_reducedness, GradedQuotient, Piece};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("relation has {0} variables, ring has {1}")]
    Arity(usize, usize),
    #[error("quotient is not finite-dimensional")]
    InfiniteDimensional,
    #[error("dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("relations generate the unit ideal")]
    ZeroRing,
    #[error("relation {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("reducedness is only supported for principal ideals")]
    NotPrincipal,
    #[error("ideal is not nilpotent, so it cannot serve as the maximal ideal")]
    NotNilpotent,
    #[error("ring has no designated maximal ideal")]
    NoMaximalIdeal,
}
