//! Rotations, Lyndon words, the ω-order, run-length encoding and symbol ranks.
//!
//! Strings are byte slices; symbols compare by unsigned byte value and all
//! indices are 0-based.

mod lyndon;
mod rle;
mod rotation;

pub(crate) use lyndon::duval;
pub use lyndon::{is_lyndon, lyndon_factorize, LyndonFactor, LyndonFactorization};
pub use rle::{rle, run_count, Run, RunLengthString};
pub use rotation::{
    is_primitive, least_rotation, least_rotation_naive, least_rotation_offset, omega_cmp,
    primitive_root, rank, rotate,
};
