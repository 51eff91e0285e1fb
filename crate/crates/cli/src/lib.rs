//! Command-line front end: the `.qfp` declaration language, Witt expressions,
//! reports and command dispatch.

pub mod app;
pub mod dsl;
pub mod expr;
pub mod report;
