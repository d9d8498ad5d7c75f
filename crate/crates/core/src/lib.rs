//! Exact tilt-stability numerics on Picard-rank-one threefolds, with sound
//! sign certificates for the smooth quadric threefold.

pub mod certify;
pub mod chern;
pub mod cli;
pub mod error;
pub mod heart;
pub mod kernel;
pub mod tilt;

pub use error::{Error, ParseError, Result};
