use std::cmp::Ordering;

use crate::error::{non_empty, Error, Result};

/// Left cyclic rotation of `x` by `i` symbols; negative `i` rotates right.
pub fn rotate(x: &[u8], i: isize) -> Result<Vec<u8>> {
    non_empty(x)?;
    let shift = i.rem_euclid(x.len() as isize) as usize;
    let mut out = Vec::with_capacity(x.len());
    out.extend_from_slice(&x[shift..]);
    out.extend_from_slice(&x[..shift]);
    Ok(out)
}

/// Lexicographically least rotation of `x` together with the smallest offset
/// producing it.
///
/// Two-pointer minimum-expression scan, linear time.
pub fn least_rotation(x: &[u8]) -> Result<(Vec<u8>, usize)> {
    let offset = least_rotation_offset(x)?;
    Ok((rotate(x, offset as isize)?, offset))
}

pub fn least_rotation_offset(x: &[u8]) -> Result<usize> {
    non_empty(x)?;
    let n = x.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = x[(i + k) % n];
        let b = x[(j + k) % n];
        match a.cmp(&b) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    Ok(i.min(j))
}

/// Quadratic reference: materialize every rotation and keep the first minimum.
pub fn least_rotation_naive(x: &[u8]) -> Result<(Vec<u8>, usize)> {
    non_empty(x)?;
    let mut best = (x.to_vec(), 0);
    for i in 1..x.len() {
        let r = rotate(x, i as isize)?;
        if r < best.0 {
            best = (r, i);
        }
    }
    Ok(best)
}

/// Length of the smallest period of `x`, from the KMP failure function.
pub(crate) fn smallest_period(x: &[u8]) -> usize {
    let n = x.len();
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && x[i] != x[k] {
            k = fail[k - 1];
        }
        if x[i] == x[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail.last().copied().unwrap_or(0)
}

/// Shortest `u` with `x = u^e`.
pub fn primitive_root(x: &[u8]) -> &[u8] {
    if x.is_empty() {
        return x;
    }
    let p = smallest_period(x);
    if x.len().is_multiple_of(p) {
        &x[..p]
    } else {
        x
    }
}

/// True iff `x` is not a proper power of a shorter string.
pub fn is_primitive(x: &[u8]) -> Result<bool> {
    non_empty(x)?;
    Ok(primitive_root(x).len() == x.len())
}

/// Compares `x^∞` with `y^∞`.
///
/// The first `|x| + |y|` symbols decide the comparison; agreement on that
/// prefix means the two periodic words coincide.
pub fn omega_cmp(x: &[u8], y: &[u8]) -> Result<Ordering> {
    non_empty(x)?;
    non_empty(y)?;
    if x.len() != y.len() && !is_primitive(x)? && !is_primitive(y)? {
        return Err(Error::OmegaUndefined);
    }
    Ok(omega_cmp_unchecked(x, y))
}

pub(crate) fn omega_cmp_unchecked(x: &[u8], y: &[u8]) -> Ordering {
    let limit = x.len() + y.len();
    let xs = x.iter().cycle();
    let ys = y.iter().cycle();
    for (a, b) in xs.zip(ys).take(limit) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Number of occurrences of `c` in `x[0..i)`.
pub fn rank(c: u8, i: usize, x: &[u8]) -> Result<usize> {
    if i > x.len() {
        return Err(Error::OutOfRange {
            index: i,
            len: x.len(),
        });
    }
    Ok(x[..i].iter().filter(|&&s| s == c).count())
}
