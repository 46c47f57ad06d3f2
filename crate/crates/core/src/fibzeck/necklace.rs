use serde::Serialize;

use super::fibonacci::{fib_num, MAX_FIB_INDEX};
use super::zeckendorf::ZeckendorfBits;
use crate::error::{Error, Result};
use crate::strings::{least_rotation, primitive_root};

/// Longest necklace length handled by [`necklaces_no11`].
pub const MAX_NECKLACE_K: usize = 63;

/// Least-rotation representatives of the cyclically "11"-free binary
/// necklaces of length `k`, in increasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecklaceSet {
    pub k: usize,
    pub representatives: Vec<ZeckendorfBits>,
}

impl NecklaceSet {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

fn rotate_mask(m: u64, r: usize, k: usize) -> u64 {
    if r == 0 {
        return m;
    }
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    ((m >> r) | (m << (k - r))) & full
}

/// Lexicographic order on masks read from bit 0 upward.
fn mask_less(s: u64, t: u64) -> bool {
    let d = s ^ t;
    d != 0 && s & (d & d.wrapping_neg()) == 0
}

fn is_canonical(m: u64, k: usize) -> bool {
    (1..k).all(|r| !mask_less(rotate_mask(m, r, k), m))
}

fn mask_to_bits(m: u64, k: usize) -> ZeckendorfBits {
    ZeckendorfBits::new((0..k).map(|j| m >> j & 1 == 1).collect())
        .expect("cyclically 11-free masks have no adjacent ones")
}

pub fn necklaces_no11(k: usize) -> Result<NecklaceSet> {
    if k == 0 || k > MAX_NECKLACE_K {
        return Err(Error::InvalidArgument(format!(
            "necklace length {k} outside [1, {MAX_NECKLACE_K}]"
        )));
    }
    let mut masks = Vec::new();
    let mut stack = vec![(0usize, 0u64)];
    while let Some((j, m)) = stack.pop() {
        if j == k {
            let wraps = m & 1 == 1 && m >> (k - 1) & 1 == 1;
            if !wraps && is_canonical(m, k) {
                masks.push(m);
            }
            continue;
        }
        stack.push((j + 1, m));
        if j == 0 || m >> (j - 1) & 1 == 0 {
            stack.push((j + 1, m | 1 << j));
        }
    }
    masks.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if mask_less(a, b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    Ok(NecklaceSet {
        k,
        representatives: masks.into_iter().map(|m| mask_to_bits(m, k)).collect(),
    })
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// C(k) = (1/k) Σ_{d | k} φ(k/d) (f_{d-2} + f_d).
pub fn count_necklaces_formula(k: usize) -> Result<u64> {
    if k == 0 || k as i64 > MAX_FIB_INDEX {
        return Err(Error::InvalidArgument(format!(
            "necklace length {k} outside [1, {MAX_FIB_INDEX}]"
        )));
    }
    let k = k as u64;
    let sum: u128 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| {
            let lucas = fib_num(d as i64 - 2) as u128 + fib_num(d as i64) as u128;
            totient(k / d) as u128 * lucas
        })
        .sum();
    Ok((sum / k as u128) as u64)
}

/// Cyclic word of the LF cycle for a necklace, as a Lyndon word. A 0 bit
/// reads `a`; a "10" pair reads `b`.
pub fn necklace_to_cycle_word(bits: &ZeckendorfBits) -> Result<Vec<u8>> {
    let k = bits.len();
    if k == 0 {
        return Err(Error::EmptyInput);
    }
    if bits.has_cyclic_11() {
        return Err(Error::InvalidArgument(format!(
            "{bits} contains 11 cyclically"
        )));
    }
    let start = (0..k)
        .find(|&t| !bits.get((t + k - 1) % k))
        .expect("a cyclically 11-free string has a 0 bit");
    let mut forward = Vec::new();
    let mut p = 0;
    while p < k {
        if bits.get((start + p) % k) {
            forward.push(b'b');
            p += 2;
        } else {
            forward.push(b'a');
            p += 1;
        }
    }
    forward.reverse();
    let root = primitive_root(&forward).to_vec();
    Ok(least_rotation(&root)?.0)
}

/// Inverse BBWT of `F_k`, built from the necklaces of length `k`.
pub fn ibbwt_fib(k: usize) -> Result<Vec<u8>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "k = {k} must be at least 2"
        )));
    }
    let set = necklaces_no11(k)?;
    let mut words = set
        .representatives
        .iter()
        .map(necklace_to_cycle_word)
        .collect::<Result<Vec<_>>>()?;
    words.sort_unstable_by(|a, b| b.cmp(a));
    Ok(words.concat())
}
