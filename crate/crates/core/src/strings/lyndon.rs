use serde::Serialize;

use crate::error::{non_empty, Result};

/// One Lyndon factor `word^exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyndonFactor {
    pub word: Vec<u8>,
    pub exponent: usize,
}

/// Chen-Fox-Lyndon factorization: strictly decreasing Lyndon words with
/// exponents, concatenating back to the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyndonFactorization {
    pub factors: Vec<LyndonFactor>,
}

impl LyndonFactorization {
    /// Number of distinct factors (not counting exponents).
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of factors counted with multiplicity.
    pub fn count_with_exponents(&self) -> usize {
        self.factors.iter().map(|f| f.exponent).sum()
    }

    pub fn decode(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for f in &self.factors {
            for _ in 0..f.exponent {
                out.extend_from_slice(&f.word);
            }
        }
        out
    }
}

/// Duval's algorithm. Returns `(start, length, exponent)` triples.
pub(crate) fn duval(w: &[u8]) -> Vec<(usize, usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let len = j - k;
        let mut exponent = 0;
        let start = i;
        while i <= k {
            i += len;
            exponent += 1;
        }
        out.push((start, len, exponent));
    }
    out
}

pub fn lyndon_factorize(w: &[u8]) -> Result<LyndonFactorization> {
    non_empty(w)?;
    let factors = duval(w)
        .into_iter()
        .map(|(start, len, exponent)| LyndonFactor {
            word: w[start..start + len].to_vec(),
            exponent,
        })
        .collect();
    Ok(LyndonFactorization { factors })
}

/// True iff `x` is strictly smaller than each of its proper rotations.
pub fn is_lyndon(x: &[u8]) -> Result<bool> {
    non_empty(x)?;
    let f = duval(x);
    Ok(f.len() == 1 && f[0].2 == 1)
}
