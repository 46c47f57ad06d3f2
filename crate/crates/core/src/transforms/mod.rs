//! BWT and bijective BWT, their inverses, and the LF mapping.

mod bwt;
mod lf;
pub mod naive;
mod sort;

pub use bwt::{bbwt, bwt, ibbwt, ibwt, sorted_rotations};
pub use lf::{lf_cycles, lf_map, Cycle, CycleDecomposition, LfPermutation};
