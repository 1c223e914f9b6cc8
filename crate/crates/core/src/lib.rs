//! Executable reconstruction of Eddington's statistical derivation of the
//! physical constants from the cosmological numbers N and R₀.

pub mod chain;
pub mod error;
pub mod exclusion;
pub mod geometry;
pub mod montecarlo;
pub mod numeric;
pub mod particles;
pub mod quantum;
pub mod report;
pub mod statmech;
pub mod zoo;

pub use error::{FtrError, Result};
