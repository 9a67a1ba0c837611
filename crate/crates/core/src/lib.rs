pub mod acs;
pub mod audit;
pub mod cli;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod metric;
pub mod models;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;
