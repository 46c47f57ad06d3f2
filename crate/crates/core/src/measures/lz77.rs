use crate::error::{non_empty, Result};

use super::scheme::{MacroScheme, Phrase};

fn z_function(s: &[u16]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

/// Greedy left-to-right LZ77 parse. Each phrase is the longest prefix of the
/// remaining suffix that also starts at an earlier position (the occurrence
/// may overlap the phrase), or a literal when the symbol is new.
pub fn lz77(w: &[u8]) -> Result<MacroScheme> {
    non_empty(w)?;
    let n = w.len();
    let mut phrases = Vec::new();
    let mut i = 0;
    while i < n {
        // Z over w[i..] · sentinel · w gives lcp(w[i..], w[j..]) for every j.
        let mut s: Vec<u16> = Vec::with_capacity(2 * n - i + 1);
        s.extend(w[i..].iter().map(|&c| c as u16));
        s.push(256);
        s.extend(w.iter().map(|&c| c as u16));
        let z = z_function(&s);
        let base = n - i + 1;
        let (len, source) = (0..i)
            .map(|j| (z[base + j], j))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .unwrap_or((0, 0));
        if len == 0 {
            phrases.push(Phrase::Literal(w[i]));
            i += 1;
        } else {
            phrases.push(Phrase::Copy { len, source });
            i += len;
        }
    }
    Ok(MacroScheme::new(n, phrases))
}

/// Number of LZ77 phrases.
pub fn z_measure(w: &[u8]) -> Result<usize> {
    Ok(lz77(w)?.size())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::scheme::bms_valid;

    /// Fewest phrases over all left-referencing parses, by dynamic programming.
    fn smallest_left_referencing(w: &[u8]) -> usize {
        let n = w.len();
        let mut best = vec![usize::MAX; n + 1];
        best[n] = 0;
        for i in (0..n).rev() {
            let mut b = 1 + best[i + 1];
            for len in 1..=n - i {
                let phrase = &w[i..i + len];
                let found = (0..i).any(|j| &w[j..j + len] == phrase);
                if found {
                    b = b.min(1 + best[i + len]);
                }
            }
            best[i] = b;
        }
        best[0]
    }

    #[test]
    fn examples() {
        let s = lz77(b"aaaa").unwrap();
        assert_eq!(
            s.phrases,
            vec![Phrase::Literal(b'a'), Phrase::Copy { len: 3, source: 0 }]
        );
        let s = lz77(b"ab").unwrap();
        assert_eq!(
            s.phrases,
            vec![Phrase::Literal(b'a'), Phrase::Literal(b'b')]
        );
        assert!(lz77(b"").is_err());
    }

    #[test]
    fn greedy_is_optimal_exhaustively() {
        for n in 1..=10 {
            for code in 0u32..(1 << n) {
                let w: Vec<u8> = (0..n).map(|j| b'a' + ((code >> j) & 1) as u8).collect();
                let s = lz77(&w).unwrap();
                assert!(bms_valid(&w, &s));
                assert_eq!(s.size(), smallest_left_referencing(&w), "{:?}", w);
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn valid_and_left_referencing(w in proptest::collection::vec(0u8..4, 1..150)) {
            let s = lz77(&w).unwrap();
            proptest::prop_assert!(bms_valid(&w, &s));
            for (start, p) in s.starts().into_iter().zip(&s.phrases) {
                if let Phrase::Copy { source, .. } = *p {
                    proptest::prop_assert!(source < start);
                }
            }
        }
    }
}
