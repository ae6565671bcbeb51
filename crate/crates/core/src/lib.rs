//! Exact symbolic engine for the quantum birational representation of the
//! affine Weyl groups of type E8, E7, E6 and D5.

pub mod coeffring;
pub mod curves;
pub mod error;
pub mod fpoly;
pub mod lattice;
pub mod qseries;
pub mod skew;
pub mod suite;
pub mod tau;
pub mod weyl;

pub use error::{Error, Result};
