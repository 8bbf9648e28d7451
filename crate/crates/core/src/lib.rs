//! Exact data for fusion categories with `A_{k+1}` fusion rules.

pub mod classification;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod json;
pub mod linalg;
pub mod modular;
pub mod scalar;
pub mod tl;
pub mod verify;

pub use cyclotomic::{CyclotomicNumber, LaurentPoly, Rational};
pub use error::{Error, Result};
