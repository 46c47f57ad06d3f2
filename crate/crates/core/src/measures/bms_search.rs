//! Exhaustive search for a smallest bidirectional macro scheme.
//!
//! Phrases are chosen left to right. A length-1 phrase is always taken as a
//! literal: a one-symbol copy costs the same and only adds constraints. Each
//! copied position's reference is checked for a cycle the moment it is added,
//! so every cycle is caught when its closing edge appears. The best of LZ77
//! and lex-parse seeds the bound.

use super::lexparse::lexparse;
use super::lz77::lz77;
use super::scheme::{MacroScheme, Phrase};
use super::Bounded;

/// Default length limit for [`b_exact`].
pub const DEFAULT_B_MAX_N: usize = 14;

struct Search<'a> {
    w: &'a [u8],
    /// `lcp[i][j]`: longest common prefix of `w[i..]` and `w[j..]`.
    lcp: Vec<Vec<usize>>,
    refs: Vec<Option<usize>>,
    literals: [usize; 256],
    /// `remaining[i][c]`: occurrences of `c` in `w[i..]`.
    remaining: Vec<[u16; 256]>,
    alphabet: Vec<u8>,
    current: Vec<Phrase>,
    best: Vec<Phrase>,
}

impl Search<'_> {
    fn closes_cycle(&self, from: usize) -> bool {
        let mut p = self.refs[from];
        let mut steps = 0;
        while let Some(q) = p {
            if q == from {
                return true;
            }
            p = self.refs[q];
            steps += 1;
            if steps > self.w.len() {
                return true;
            }
        }
        false
    }

    fn lower_bound(&self, i: usize) -> Option<usize> {
        if i == self.w.len() {
            return Some(0);
        }
        let mut missing = 0;
        for &c in &self.alphabet {
            if self.literals[c as usize] == 0 {
                if self.remaining[i][c as usize] == 0 {
                    return None;
                }
                missing += 1;
            }
        }
        Some(missing.max(1))
    }

    fn run(&mut self, i: usize) {
        let n = self.w.len();
        let Some(lb) = self.lower_bound(i) else {
            return;
        };
        if self.current.len() + lb >= self.best.len() {
            return;
        }
        if i == n {
            self.best = self.current.clone();
            return;
        }

        let longest = (0..n)
            .filter(|&j| j != i)
            .map(|j| self.lcp[i][j])
            .max()
            .unwrap_or(0);
        for len in (2..=longest).rev() {
            for source in 0..=n - len {
                if source == i || self.lcp[i][source] < len {
                    continue;
                }
                let mut ok = true;
                let mut assigned = 0;
                for t in 0..len {
                    self.refs[i + t] = Some(source + t);
                    assigned += 1;
                    if self.closes_cycle(i + t) {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    self.current.push(Phrase::Copy { len, source });
                    self.run(i + len);
                    self.current.pop();
                }
                for t in 0..assigned {
                    self.refs[i + t] = None;
                }
            }
        }

        let c = self.w[i];
        self.literals[c as usize] += 1;
        self.current.push(Phrase::Literal(c));
        self.run(i + 1);
        self.current.pop();
        self.literals[c as usize] -= 1;
    }
}

/// A smallest valid macro scheme of `w`, or `None` when `|w| > max_n`.
pub fn smallest_bms(w: &[u8], max_n: usize) -> Option<MacroScheme> {
    let n = w.len();
    if n > max_n {
        return None;
    }
    if n == 0 {
        return Some(MacroScheme::new(0, Vec::new()));
    }
    let mut lcp = vec![vec![0usize; n + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..n).rev() {
            if w[i] == w[j] {
                lcp[i][j] = 1 + lcp[i + 1][j + 1];
            }
        }
    }
    let mut remaining = vec![[0u16; 256]; n + 1];
    for i in (0..n).rev() {
        remaining[i] = remaining[i + 1];
        remaining[i][w[i] as usize] += 1;
    }
    let mut alphabet: Vec<u8> = w.to_vec();
    alphabet.sort_unstable();
    alphabet.dedup();

    let seed = [lz77(w).ok()?, lexparse(w).ok()?]
        .into_iter()
        .min_by_key(|s| s.size())?;
    let mut search = Search {
        w,
        lcp,
        refs: vec![None; n],
        literals: [0; 256],
        remaining,
        alphabet,
        current: Vec::new(),
        best: seed.phrases,
    };
    search.run(0);
    Some(MacroScheme::new(n, search.best))
}

/// b(w) by exhaustive search, or `LimitExceeded` when `|w| > max_n`.
pub fn b_exact(w: &[u8], max_n: usize) -> Bounded {
    match smallest_bms(w, max_n) {
        Some(s) => Bounded::Exact(s.size()),
        None => Bounded::LimitExceeded,
    }
}
