//! Fibonacci words, the morphisms φ and θ, Zeckendorf numeration and the
//! "11"-free necklaces that describe the LF cycles of Fibonacci words.

mod fibonacci;
mod necklace;
mod zeckendorf;

pub use fibonacci::{
    bwt_yk_closed, family_w, family_y, fib_num, fib_rotation_rank, fib_star, fib_word, phi_apply,
    theta_apply, MAX_FIB_INDEX,
};
pub use necklace::{
    count_necklaces_formula, ibbwt_fib, necklace_to_cycle_word, necklaces_no11, totient,
    NecklaceSet, MAX_NECKLACE_K,
};
pub use zeckendorf::{
    fib_prefix_factorization, fib_symbol, psi_fib, psi_fib_rot, zeck_value, zeckendorf,
    zeckendorf_k, ZeckendorfBits,
};
