//! Explicit fusion products of two simple modules, computed exactly.

mod graded;
mod irrep;
mod linalg;
mod peel;

pub use graded::{fusion_graded, GradedDecomposition};
pub use irrep::{build_irrep, ExplicitModule, SparseMatrix, DEFAULT_DIM_CAP};
pub use linalg::{q, SparseVec, Q};
pub use peel::peel_character;
