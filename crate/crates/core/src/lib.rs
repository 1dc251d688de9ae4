//! Exact derivation, verification and simulation of qutrit teleportation
//! through the nine SU(3) two-qutrit entangled states.

pub mod analysis;
pub mod basis;
pub mod cli;
pub mod engine;
pub mod error;
pub mod gate_table;
pub mod qutrit;
pub mod scalar;
pub mod sim;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::ExtScalar;
