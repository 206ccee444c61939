//! Exact symbolic analysis of harmonic and biharmonic maps between spheres
//! given by polynomial maps.

pub mod cli;
pub mod constructors;
pub mod error;
pub mod fields;
pub mod maps;
pub mod numcheck;
pub mod polyalg;

pub use error::{Error, Result};
