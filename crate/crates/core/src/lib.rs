//! Exact models of G2, Spin(8), Spin(16) and E8, with checks of maximal antipodal
//! sets in the exceptional compact symmetric spaces.

pub mod catalog;
pub mod cli;
pub mod clifford;
pub mod diagram;
pub mod e8model;
pub mod error;
pub mod octonion;
pub mod report;
pub mod rootsys;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
