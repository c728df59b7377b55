//! Exact Kronecker–Jordan invariants of matrix pencils and Jordan–Kronecker
//! invariants of Lie algebra representations.

pub mod error;
pub mod cli;
pub mod exactmath;
pub mod jk;
pub mod liealg;
pub mod linalg;
pub mod pencil;
pub mod rng;
pub mod shifts;

pub use error::{Error, Result};
