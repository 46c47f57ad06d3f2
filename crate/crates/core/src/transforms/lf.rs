use serde::Serialize;

use crate::error::{non_empty, Result};
use crate::strings::least_rotation;

/// The LF mapping `Ψ_x` of a string `x`.
///
/// `target[i]` is the position in the sorted multiset of symbols of `x` that
/// holds the same occurrence of `x[i]`: equal symbols keep their relative
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LfPermutation {
    pub source: Vec<u8>,
    pub target: Vec<usize>,
}

impl LfPermutation {
    pub fn len(&self) -> usize {
        self.target.len()
    }

    pub fn is_empty(&self) -> bool {
        self.target.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.target[i]
    }
}

pub fn lf_map(x: &[u8]) -> Result<LfPermutation> {
    non_empty(x)?;
    let mut counts = [0usize; 256];
    for &c in x {
        counts[c as usize] += 1;
    }
    let mut next = [0usize; 256];
    let mut sum = 0;
    for c in 0..256 {
        next[c] = sum;
        sum += counts[c];
    }
    let target = x
        .iter()
        .map(|&c| {
            let t = next[c as usize];
            next[c as usize] += 1;
            t
        })
        .collect();
    Ok(LfPermutation {
        source: x.to_vec(),
        target,
    })
}

/// One orbit of `Ψ_x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cycle {
    /// `i, Ψ(i), Ψ²(i), …` starting from the smallest position of the orbit.
    pub positions: Vec<usize>,
    /// `x[Ψ^{k-1}(i)] ⋯ x[Ψ(i)] x[i]`, the cyclic word the orbit spells.
    pub word: Vec<u8>,
    /// Least rotation of `word`.
    pub lyndon: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

pub fn lf_cycles(x: &[u8]) -> Result<CycleDecomposition> {
    let lf = lf_map(x)?;
    let n = x.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut positions = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            positions.push(p);
            p = lf.target[p];
        }
        let word: Vec<u8> = positions.iter().rev().map(|&p| x[p]).collect();
        let (lyndon, _) = least_rotation(&word)?;
        cycles.push(Cycle {
            positions,
            word,
            lyndon,
        });
    }
    Ok(CycleDecomposition { cycles })
}
