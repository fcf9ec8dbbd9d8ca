//! Yang–Baxter–derived two-qubit Hamiltonians and the evolution of quantum
//! correlations (concurrence, entanglement of formation, coherence and
//! measurement-induced disturbance) under them.

pub mod algebra;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod hamiltonian;
pub mod linalg;
pub mod measures;
pub mod output;
pub mod spin;
pub mod states;
pub mod verify;

#[cfg(test)]
mod test_util;

pub use error::{Error, Result};
