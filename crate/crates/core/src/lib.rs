//! Exact finite-dimensional Hopf algebras, comodule algebras, Hopf-Galois
//! checks, cocycle twists and polynomial homotopy witnesses.

pub mod comodule;
pub mod constructions;
pub mod error;
pub mod homotopy;
pub mod hopf;
pub mod json;
pub mod par;
pub mod report;
pub mod scalars;
pub mod suite;
pub mod twisting;

pub use error::{Error, Result};
