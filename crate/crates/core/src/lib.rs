//! Truncated Witt vectors and quasi-F-split heights in positive characteristic.

pub mod arith;
pub mod ring_model;
pub mod witt;
pub mod solver;
pub mod verify;
