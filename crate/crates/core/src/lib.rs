//! Exact computer algebra for twisted Hopf algebras, twisted pairings and
//! twisted Heisenberg doubles over ℚ(q).

pub mod double;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod instances;
pub mod linalg;
pub mod lincomb;
pub mod pairing;
pub mod report;
pub mod scalars;
pub mod twisting;

pub use error::{Error, Result};
