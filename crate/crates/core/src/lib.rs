//! Exact constructions for extended Yangians of types B, C and D.
//!
//! Every object lives over ℚ or ℚ(u): R-matrices, representations given by matrices
//! of rational functions, highest weights and Drinfeld polynomials. Two-variable
//! identities are proven by evaluation on grids larger than their degree bounds.

pub mod error;
pub mod algebra;
pub mod exact;
pub mod gl2;
pub mod hw;
pub mod linalg;
pub mod lowrank;
pub mod report;
pub mod spinor;
pub mod yangian;

pub use error::{Error, Result};
