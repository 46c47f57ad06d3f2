use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

use super::Bounded;

/// Sorted, distinct positions of a string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttractorSet {
    positions: Vec<usize>,
}

impl AttractorSet {
    /// Sorts and deduplicates; every position must be below `n`.
    pub fn new(mut positions: Vec<usize>, n: usize) -> Result<Self> {
        positions.sort_unstable();
        positions.dedup();
        if let Some(&p) = positions.iter().find(|&&p| p >= n) {
            return Err(Error::OutOfRange { index: p, len: n });
        }
        Ok(AttractorSet { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// True iff every distinct substring of `w` has an occurrence covering a
/// position of `gamma`.
pub fn attractor_valid(w: &[u8], gamma: &AttractorSet) -> bool {
    let n = w.len();
    // marked[p] = number of attractor positions in [0, p)
    let mut marked = vec![0usize; n + 1];
    let mut member = vec![false; n];
    for &p in gamma.positions() {
        if p < n {
            member[p] = true;
        }
    }
    for p in 0..n {
        marked[p + 1] = marked[p] + member[p] as usize;
    }
    for len in 1..=n {
        let mut covered: HashMap<&[u8], bool> = HashMap::new();
        for start in 0..=n - len {
            let hit = marked[start + len] > marked[start];
            *covered.entry(&w[start..start + len]).or_insert(false) |= hit;
        }
        if covered.values().any(|&hit| !hit) {
            return false;
        }
    }
    true
}

/// Largest input length the bitmask search supports.
const MASK_BITS: usize = 128;

/// For each distinct substring, the set of positions covered by at least one
/// of its occurrences. Only inclusion-minimal sets are kept: hitting them
/// hits every superset.
fn coverage_masks(w: &[u8]) -> Vec<u128> {
    let n = w.len();
    let mut masks: Vec<u128> = Vec::new();
    for len in 1..=n {
        let window: u128 = if len == MASK_BITS {
            u128::MAX
        } else {
            (1u128 << len) - 1
        };
        let mut by_substring: HashMap<&[u8], u128> = HashMap::new();
        for start in 0..=n - len {
            *by_substring.entry(&w[start..start + len]).or_insert(0) |= window << start;
        }
        masks.extend(by_substring.into_values());
    }
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut minimal: Vec<u128> = Vec::new();
    for m in masks {
        if !minimal.iter().any(|&k| m & !k == 0) {
            minimal.push(m);
        }
    }
    minimal
}

fn hitting_set(masks: &[u128], chosen: u128, budget: usize) -> Option<u128> {
    let unhit = masks
        .iter()
        .filter(|&&m| m & chosen == 0)
        .min_by_key(|m| m.count_ones());
    let Some(&target) = unhit else {
        return Some(chosen);
    };
    if budget == 0 {
        return None;
    }
    let mut bits = target;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        bits ^= b;
        if let Some(found) = hitting_set(masks, chosen | b, budget - 1) {
            return Some(found);
        }
    }
    None
}

/// A smallest string attractor of `w`, searched by increasing size up to
/// `max_size`; `None` past either limit.
pub fn smallest_attractor(w: &[u8], max_n: usize, max_size: usize) -> Option<AttractorSet> {
    let n = w.len();
    if n > max_n || n > MASK_BITS {
        return None;
    }
    let masks = coverage_masks(w);
    (0..=max_size).find_map(|size| {
        hitting_set(&masks, 0, size).map(|set| {
            let positions = (0..n).filter(|&p| set >> p & 1 == 1).collect();
            AttractorSet { positions }
        })
    })
}

/// γ(w) by exhaustive search, or `LimitExceeded` when `|w| > max_n` or no
/// attractor of size at most `max_size` exists.
pub fn gamma_exact(w: &[u8], max_n: usize, max_size: usize) -> Bounded {
    match smallest_attractor(w, max_n, max_size) {
        Some(set) => Bounded::Exact(set.len()),
        None => Bounded::LimitExceeded,
    }
}
