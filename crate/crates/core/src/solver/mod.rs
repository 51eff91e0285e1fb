//! Quasi-F-splitting: the module `Q_{R,n}`, the map `Φ_{R,n}`, splitting
//! searches and height reports.

mod fedder;
mod finite;
mod graded;
mod height;
mod qmodel;

use thiserror::Error;

use crate::arith::PolyError;
use crate::ring_model::RingError;
use crate::witt::WittError;

pub use fedder::{fedder_check, FedderVerdict};
pub use finite::{
    finite_system, phi_kernel, split_finite, verify_finite_splitting, FiniteSplit, FiniteSplitCheck, Splitting,
};
pub use graded::{
    split_graded_system, verify_graded_splitting, GradedSigma, GradedSplit, GradedSystem, SigmaEntry,
};
pub use height::{height_search, Height, HeightKind, HeightReport, LevelVerdict, RingInput, SearchLimits, Verdict};
pub use qmodel::{compare_q_models, witt_at, witt_index, QComparison, QKind, QModel, DEFAULT_ENUM_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Witt(#[from] WittError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("enumerating {what} exceeds the cap {cap}")]
    EnumerationCap { what: &'static str, cap: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ring is not reduced (nilpotent {0})")]
    NotReduced(String),
    #[error("degree cap must be at least 2, got {0}")]
    DegreeTooSmall(u32),
}
