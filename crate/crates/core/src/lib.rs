//! Polytope parametrizations of tensor products for `sl_n`.
//!
//! The crate computes the same multiplicities along independent routes:
//! Littlewood–Richardson coefficients ([`tensor`]), lattice points of
//! Dyck-path polytopes ([`dyck`]), closed formulas in special regimes
//! ([`cases`]) and explicit graded fusion products ([`fusion`]).

pub mod cases;
pub mod character;
pub mod dyck;
pub mod error;
pub mod fusion;
pub mod poset;
pub mod tensor;
pub mod typea;
pub mod verify;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use tensor::{lr_coefficients, DecompositionMap};
pub use typea::{Rank, Root, Weight};
