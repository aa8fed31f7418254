//! Verification harness.
mod matrix;
mod suite;

pub use matrix::*;
pub use suite::*;
