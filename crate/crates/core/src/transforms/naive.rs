//! Materialize-and-sort reference transforms.
//!
//! Quadratic memory and `O(n² log n)` time; these exist to cross-check the
//! doubling-based transforms and are fine up to a few thousand symbols.

use crate::error::{non_empty, Result};
use crate::strings::{lyndon_factorize, omega_cmp};

/// Rotation offsets of `w` in lexicographic order (stable by offset),
/// compared over the doubled string.
pub fn sorted_rotations_naive(w: &[u8]) -> Result<Vec<usize>> {
    non_empty(w)?;
    let n = w.len();
    let doubled: Vec<u8> = w.iter().chain(w.iter()).copied().collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| doubled[i..i + n].cmp(&doubled[j..j + n]));
    Ok(order)
}

pub fn bwt_naive(w: &[u8]) -> Result<Vec<u8>> {
    let n = w.len();
    Ok(sorted_rotations_naive(w)?
        .into_iter()
        .map(|i| w[(i + n - 1) % n])
        .collect())
}

/// BBWT by collecting every rotation of every Lyndon factor (with
/// multiplicity) and sorting with [`omega_cmp`].
pub fn bbwt_naive(w: &[u8]) -> Result<Vec<u8>> {
    non_empty(w)?;
    let factors = lyndon_factorize(w)?;
    let mut rotations: Vec<Vec<u8>> = Vec::with_capacity(w.len());
    for f in &factors.factors {
        let m = f.word.len();
        for _ in 0..f.exponent {
            for i in 0..m {
                let mut r = f.word[i..].to_vec();
                r.extend_from_slice(&f.word[..i]);
                rotations.push(r);
            }
        }
    }
    rotations.sort_by(|x, y| omega_cmp(x, y).expect("rotations of Lyndon words are primitive"));
    Ok(rotations.iter().map(|r| *r.last().unwrap()).collect())
}
