//! Exact computations in the standard modules of the rational Cherednik
//! algebra of the complex reflection group G(r,1,2): Dunkl operators,
//! singular polynomials and homomorphisms between standard modules.

pub mod arith;
pub mod cli;
pub mod error;
pub mod hom;
pub mod labels;
pub mod linalg;
pub mod module;
pub mod oracle;
pub mod repro;
pub mod singular;

pub use error::{Error, Result};
