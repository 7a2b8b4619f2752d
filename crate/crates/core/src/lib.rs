//! Exact divisor, Picard-class and ideal arithmetic on towers of affine
//! curves over the `t`-line.

pub mod checkers;
pub mod cover;
pub mod curve;
pub mod divisor;
pub mod error;
pub mod exact;
pub mod geom;
pub mod ideals;
pub mod pic;
pub mod sampling;
pub mod tower;

pub use error::{Error, Result};
