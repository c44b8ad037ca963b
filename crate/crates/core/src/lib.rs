//! Combinatorial invariants of monomial ideals: size, bigsize over admissible
//! orders, polarization, lcm-lattices and exact Stanley depth.

pub mod error;
pub mod ideal;
pub mod invariants;
pub mod polarization;
pub mod sdepth;
pub mod document;
pub mod fixtures;
pub mod random;
pub mod verify;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
