use crate::error::Result;
use crate::transforms::sorted_rotations;

use super::scheme::{MacroScheme, Phrase};

/// Greedy lex-parse over rotations.
///
/// The phrase starting at `i` copies from the start of the rotation that
/// immediately precedes `rot(w, i)` in sorted order, for as long as the two
/// rotations agree and both ranges stay inside `w`. The rank-0 rotation and
/// positions whose predecessor differs in the first symbol become literals.
pub fn lexparse(w: &[u8]) -> Result<MacroScheme> {
    let n = w.len();
    let order = sorted_rotations(w)?;
    let mut rank = vec![0usize; n];
    for (r, &p) in order.iter().enumerate() {
        rank[p] = r;
    }

    let mut phrases = Vec::new();
    let mut i = 0;
    while i < n {
        let r = rank[i];
        let copy = if r == 0 {
            None
        } else {
            let src = order[r - 1];
            let limit = (n - i).min(n - src);
            let len = (0..limit).take_while(|&t| w[i + t] == w[src + t]).count();
            (len > 0).then_some((len, src))
        };
        match copy {
            Some((len, source)) => {
                phrases.push(Phrase::Copy { len, source });
                i += len;
            }
            None => {
                phrases.push(Phrase::Literal(w[i]));
                i += 1;
            }
        }
    }
    Ok(MacroScheme::new(n, phrases))
}

/// Number of lex-parse phrases.
pub fn v_measure(w: &[u8]) -> Result<usize> {
    Ok(lexparse(w)?.size())
}
