use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::fibonacci::{fib_num, MAX_FIB_INDEX};
use crate::error::{Error, Result};

/// Zeckendorf numeral: `bits[j]` carries weight `f_{j+1}`, least significant
/// first. No two adjacent bits are set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeckendorfBits {
    bits: Vec<bool>,
}

impl ZeckendorfBits {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.windows(2).any(|p| p[0] && p[1]) {
            return Err(Error::InvalidArgument("adjacent 1 bits".into()));
        }
        Ok(ZeckendorfBits { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, j: usize) -> bool {
        self.bits.get(j).copied().unwrap_or(false)
    }

    /// `Σ bits[j] · f_{j+1}`.
    pub fn value(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| fib_num(j as i64 + 1))
            .sum()
    }

    /// Left rotation by `r`: bit `j` of the result is bit `j + r` of `self`.
    pub fn rotate_left(&self, r: usize) -> Result<Self> {
        if self.bits.is_empty() {
            return Ok(self.clone());
        }
        let mut bits = self.bits.clone();
        bits.rotate_left(r % self.bits.len());
        Self::new(bits)
    }

    /// True when the bits contain "11" read cyclically.
    pub fn has_cyclic_11(&self) -> bool {
        let n = self.bits.len();
        n > 0 && (0..n).any(|j| self.bits[j] && self.bits[(j + 1) % n])
    }
}

impl fmt::Display for ZeckendorfBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ZeckendorfBits {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidArgument(format!("bad bit {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Self::new(bits)
    }
}

impl Serialize for ZeckendorfBits {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Z(i), as short as possible but at least one bit long.
pub fn zeckendorf(i: u64) -> ZeckendorfBits {
    let mut top = 0usize;
    while (top as i64 + 2) <= MAX_FIB_INDEX && fib_num(top as i64 + 2) <= i {
        top += 1;
    }
    let mut bits = vec![false; top + 1];
    let mut rest = i;
    for j in (0..=top).rev() {
        let f = fib_num(j as i64 + 1);
        if f <= rest {
            bits[j] = true;
            rest -= f;
        }
    }
    debug_assert_eq!(rest, 0);
    ZeckendorfBits { bits }
}

/// Z_k(i): Z(i) padded to exactly `k` bits. Requires `i < f_k`.
pub fn zeckendorf_k(i: u64, k: usize) -> Result<ZeckendorfBits> {
    let bound = fib_num(k as i64);
    if i >= bound {
        return Err(Error::OutOfRange {
            index: i as usize,
            len: bound as usize,
        });
    }
    let mut z = zeckendorf(i);
    z.bits.resize(k.max(1), false);
    z.bits.truncate(k);
    Ok(z)
}

pub fn zeck_value(bits: &ZeckendorfBits) -> u64 {
    bits.value()
}

/// Indices `j + 1` with `Z(i)[j] = 1`, largest first. The Fibonacci words
/// with these indices concatenate to the length-`i` prefix of the infinite
/// Fibonacci word.
pub fn fib_prefix_factorization(i: u64) -> Vec<usize> {
    let z = zeckendorf(i);
    (0..z.len())
        .rev()
        .filter(|&j| z.get(j))
        .map(|j| j + 1)
        .collect()
}

/// Symbol `i` of the infinite Fibonacci word.
pub fn fib_symbol(i: u64) -> u8 {
    if zeckendorf(i).get(0) {
        b'b'
    } else {
        b'a'
    }
}

/// Number of `a`s in the length-`i` prefix of the infinite Fibonacci word.
fn rank_a_prefix(i: u64) -> u64 {
    fib_prefix_factorization(i)
        .into_iter()
        .map(|idx| fib_num(idx as i64 - 1))
        .sum()
}

fn check_position(k: usize, i: u64) -> Result<()> {
    let len = fib_num(k as i64);
    if i >= len {
        return Err(Error::OutOfRange {
            index: i as usize,
            len: len as usize,
        });
    }
    Ok(())
}

/// LF image of position `i` in `F_k`, from symbol ranks.
pub fn psi_fib(k: usize, i: u64) -> Result<u64> {
    check_position(k, i)?;
    if k == 0 {
        return Ok(0);
    }
    let rank_a = rank_a_prefix(i);
    Ok(if fib_symbol(i) == b'a' {
        rank_a
    } else {
        fib_num(k as i64 - 1) + (i - rank_a)
    })
}

/// LF image of position `i` in `F_k` as a rotation of `Z_k(i)`: one bit
/// when `F_k[i] = a`, two bits when `F_k[i] = b`.
pub fn psi_fib_rot(k: usize, i: u64) -> Result<u64> {
    check_position(k, i)?;
    if k == 0 {
        return Ok(0);
    }
    let z = zeckendorf_k(i, k)?;
    let shift = if z.get(0) { 2 } else { 1 };
    Ok(z.rotate_left(shift)?.value())
}
