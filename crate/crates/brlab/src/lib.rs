//! Numerical laboratory for bilinear Bochner–Riesz means and their square functions.

pub mod decomposition;
pub mod experiments;
pub mod error;
pub mod identities;
pub mod kernel;
pub mod ops;
pub mod quad;
pub mod sparse;
pub mod spectral;
pub mod special;
pub mod symbols;

pub use error::{Error, Result};
