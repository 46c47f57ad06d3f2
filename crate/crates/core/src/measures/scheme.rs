use serde::Serialize;

use crate::error::{Error, Result};

/// A phrase of a macro scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phrase {
    /// A single explicit symbol.
    Literal(u8),
    /// `len` symbols copied from `source..source + len`.
    Copy { len: usize, source: usize },
}

impl Phrase {
    pub fn len(&self) -> usize {
        match *self {
            Phrase::Literal(_) => 1,
            Phrase::Copy { len, .. } => len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A parse of a length-`n` string into literal and copy phrases.
///
/// Valid schemes (see [`bms_valid`]) have copies whose content matches their
/// source and whose per-position references form a forest rooted at the
/// literals. LZ77 and lex-parse are special cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MacroScheme {
    pub n: usize,
    pub phrases: Vec<Phrase>,
}

impl MacroScheme {
    pub fn new(n: usize, phrases: Vec<Phrase>) -> Self {
        MacroScheme { n, phrases }
    }

    /// Number of phrases.
    pub fn size(&self) -> usize {
        self.phrases.len()
    }

    /// Start position of every phrase.
    pub fn starts(&self) -> Vec<usize> {
        let mut pos = 0;
        self.phrases
            .iter()
            .map(|p| {
                let s = pos;
                pos += p.len();
                s
            })
            .collect()
    }

    /// Expands the scheme into a string, following references in order of
    /// dependency. Fails if the scheme is malformed or cyclic.
    pub fn decode(&self) -> Result<Vec<u8>> {
        let refs = self.references()?;
        let mut out: Vec<Option<u8>> = vec![None; self.n];
        let mut pos = 0;
        for p in &self.phrases {
            if let Phrase::Literal(c) = *p {
                out[pos] = Some(c);
            }
            pos += p.len();
        }
        let order = topological_order(&refs)
            .ok_or_else(|| Error::InvalidScheme("cyclic position references".to_string()))?;
        for p in order {
            if let Some(src) = refs[p] {
                out[p] = out[src];
            }
        }
        Ok(out
            .into_iter()
            .map(|c| c.expect("every chain ends at a literal"))
            .collect())
    }

    /// Per-position reference: `Some(src)` for copied positions, `None` for
    /// literals.
    pub fn references(&self) -> Result<Vec<Option<usize>>> {
        let mut refs = Vec::with_capacity(self.n);
        for p in &self.phrases {
            match *p {
                Phrase::Literal(_) => refs.push(None),
                Phrase::Copy { len, source } => {
                    if len == 0 {
                        return Err(Error::InvalidScheme("empty copy phrase".to_string()));
                    }
                    if source + len > self.n {
                        return Err(Error::InvalidScheme(format!(
                            "source {}..{} exceeds length {}",
                            source,
                            source + len,
                            self.n
                        )));
                    }
                    refs.extend((source..source + len).map(Some));
                }
            }
        }
        if refs.len() != self.n {
            return Err(Error::InvalidScheme(format!(
                "phrases cover {} positions, expected {}",
                refs.len(),
                self.n
            )));
        }
        Ok(refs)
    }

    /// Explains why the scheme is not valid for `w`.
    pub fn check(&self, w: &[u8]) -> Result<()> {
        if self.n != w.len() {
            return Err(Error::InvalidScheme(format!(
                "scheme for length {}, string has length {}",
                self.n,
                w.len()
            )));
        }
        let refs = self.references()?;
        let mut pos = 0;
        for p in &self.phrases {
            match *p {
                Phrase::Literal(c) => {
                    if w[pos] != c {
                        return Err(Error::InvalidScheme(format!(
                            "literal at {} does not match",
                            pos
                        )));
                    }
                }
                Phrase::Copy { len, source } => {
                    if w[pos..pos + len] != w[source..source + len] {
                        return Err(Error::InvalidScheme(format!(
                            "copy at {} does not match its source {}",
                            pos, source
                        )));
                    }
                }
            }
            pos += p.len();
        }
        if topological_order(&refs).is_none() {
            return Err(Error::InvalidScheme(
                "cyclic position references".to_string(),
            ));
        }
        Ok(())
    }
}

/// Positions ordered so that every reference target precedes its referrer,
/// or `None` if the references contain a cycle.
fn topological_order(refs: &[Option<usize>]) -> Option<Vec<usize>> {
    const NEW: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;
    let mut state = vec![NEW; refs.len()];
    let mut order = Vec::with_capacity(refs.len());
    let mut chain = Vec::new();
    for start in 0..refs.len() {
        let mut p = start;
        loop {
            match state[p] {
                NEW => {
                    state[p] = ACTIVE;
                    chain.push(p);
                    match refs[p] {
                        Some(next) => p = next,
                        None => break,
                    }
                }
                ACTIVE => return None,
                _ => break,
            }
        }
        while let Some(q) = chain.pop() {
            state[q] = DONE;
            order.push(q);
        }
    }
    Some(order)
}

/// True iff `scheme` is a valid bidirectional macro scheme of `w`.
pub fn bms_valid(w: &[u8], scheme: &MacroScheme) -> bool {
    scheme.check(w).is_ok()
}

/// Builds a valid scheme for `rot(w, offset)` from a valid scheme of `w`,
/// keeping every per-position reference. The phrase containing the rotation
/// point is split there, and any copy whose source wraps around the new
/// string boundary is split at the wrap, giving at most `2b + 1` phrases.
pub fn bms_rotate(w: &[u8], scheme: &MacroScheme, offset: usize) -> Result<MacroScheme> {
    scheme.check(w)?;
    let n = w.len();
    if offset >= n {
        return Err(Error::OutOfRange {
            index: offset,
            len: n,
        });
    }
    if offset == 0 {
        return Ok(scheme.clone());
    }

    // Split the phrase straddling `offset`, then list phrases in the rotated
    // order with their original start positions.
    let mut pieces: Vec<(usize, Phrase)> = Vec::with_capacity(scheme.size() + 1);
    for (start, phrase) in scheme.starts().into_iter().zip(&scheme.phrases) {
        match *phrase {
            Phrase::Copy { len, source } if start < offset && offset < start + len => {
                let head = offset - start;
                pieces.push((start, Phrase::Copy { len: head, source }));
                pieces.push((
                    offset,
                    Phrase::Copy {
                        len: len - head,
                        source: source + head,
                    },
                ));
            }
            p => pieces.push((start, p)),
        }
    }
    let first = pieces
        .iter()
        .position(|&(start, _)| start == offset)
        .expect("offset is a phrase boundary after splitting");
    pieces.rotate_left(first);

    let mut phrases = Vec::with_capacity(pieces.len() * 2);
    for (_, phrase) in pieces {
        match phrase {
            Phrase::Literal(c) => phrases.push(Phrase::Literal(c)),
            Phrase::Copy { len, source } => {
                let moved = (source + n - offset) % n;
                if moved + len > n {
                    let head = n - moved;
                    phrases.push(Phrase::Copy {
                        len: head,
                        source: moved,
                    });
                    phrases.push(Phrase::Copy {
                        len: len - head,
                        source: 0,
                    });
                } else {
                    phrases.push(Phrase::Copy { len, source: moved });
                }
            }
        }
    }
    Ok(MacroScheme::new(n, phrases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::rotate;

    fn lit(c: u8) -> Phrase {
        Phrase::Literal(c)
    }

    fn copy(len: usize, source: usize) -> Phrase {
        Phrase::Copy { len, source }
    }

    #[test]
    fn validity_examples() {
        let s = MacroScheme::new(4, vec![lit(b'a'), copy(3, 0)]);
        assert!(bms_valid(b"aaaa", &s));
        assert_eq!(s.decode().unwrap(), b"aaaa");

        let cyclic = MacroScheme::new(2, vec![copy(1, 1), copy(1, 0)]);
        assert!(!bms_valid(b"aa", &cyclic));

        let self_ref = MacroScheme::new(2, vec![lit(b'a'), copy(1, 1)]);
        assert!(!bms_valid(b"aa", &self_ref));

        let mismatch = MacroScheme::new(3, vec![lit(b'a'), copy(2, 0)]);
        assert!(!bms_valid(b"aab", &mismatch));

        let short = MacroScheme::new(3, vec![lit(b'a')]);
        assert!(!bms_valid(b"aaa", &short));

        // bidirectional: the first phrase copies from the right
        let right = MacroScheme::new(4, vec![copy(2, 2), lit(b'a'), lit(b'b')]);
        assert!(bms_valid(b"abab", &right));
        assert_eq!(right.decode().unwrap(), b"abab");

        // three-cycle through a chain
        let three = MacroScheme::new(3, vec![copy(1, 1), copy(1, 2), copy(1, 0)]);
        assert!(!bms_valid(b"aaa", &three));
    }

    #[test]
    fn rotate_identity() {
        let s = MacroScheme::new(4, vec![lit(b'a'), copy(3, 0)]);
        assert_eq!(bms_rotate(b"aaaa", &s, 0).unwrap(), s);
    }

    #[test]
    fn rotate_aaaa() {
        let s = MacroScheme::new(4, vec![lit(b'a'), copy(3, 0)]);
        let r = bms_rotate(b"aaaa", &s, 2).unwrap();
        assert!(bms_valid(b"aaaa", &r));
        assert!(r.size() <= 5);
    }

    #[test]
    fn rotate_rejects_invalid_input() {
        let bad = MacroScheme::new(2, vec![copy(1, 1), copy(1, 0)]);
        assert!(bms_rotate(b"aa", &bad, 1).is_err());
    }

    #[test]
    fn rotate_splits_wrapping_sources() {
        // "abcabc": literals a b c then copy of the first half
        let w = b"abcabc";
        let s = MacroScheme::new(6, vec![lit(b'a'), lit(b'b'), lit(b'c'), copy(3, 0)]);
        for offset in 0..6 {
            let r = bms_rotate(w, &s, offset).unwrap();
            let rw = rotate(w, offset as isize).unwrap();
            assert!(bms_valid(&rw, &r), "offset {offset}: {r:?}");
            assert!(r.size() <= 2 * s.size() + 1);
        }
    }
}
