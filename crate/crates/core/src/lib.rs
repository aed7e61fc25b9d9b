pub mod algebra;
pub mod arith;
pub mod beta_moments;
pub mod cli;
pub mod error;
pub mod hessenberg;
pub mod narayana_poly;
pub mod report;
pub mod sequences;

pub use error::{Error, Result};
