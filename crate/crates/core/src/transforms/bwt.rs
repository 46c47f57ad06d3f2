use crate::error::{non_empty, Error, Result};
use crate::strings::duval;

use super::lf::lf_cycles;
use super::sort::omega_sort;

/// Rotation offsets of `w` in lexicographic order; equal rotations (only
/// possible for non-primitive `w`) are ordered by offset.
pub fn sorted_rotations(w: &[u8]) -> Result<Vec<usize>> {
    non_empty(w)?;
    Ok(omega_sort(w, &[(0, w.len())], w.len()))
}

/// Burrows-Wheeler transform over rotations, no sentinel: the symbol
/// preceding each rotation of `w`, rotations sorted lexicographically.
pub fn bwt(w: &[u8]) -> Result<Vec<u8>> {
    let n = w.len();
    Ok(sorted_rotations(w)?
        .into_iter()
        .map(|i| w[(i + n - 1) % n])
        .collect())
}

/// Inverse BWT, returning the least rotation of the preimage.
///
/// A non-primitive image `bwt(u^e)` decomposes into `e` LF cycles that all
/// spell the same word; the result is then `rot*(u)^e`.
pub fn ibwt(x: &[u8]) -> Result<Vec<u8>> {
    let cycles = lf_cycles(x)?;
    let first = &cycles.cycles[0].lyndon;
    if cycles.cycles.iter().any(|c| &c.lyndon != first) {
        return Err(Error::NotBwtImage);
    }
    Ok(first.repeat(cycles.len()))
}

/// Bijective BWT: the symbol preceding each rotation of each Lyndon factor,
/// rotations sorted in ω-order. A factor `L^e` contributes every rotation of
/// `L` `e` times.
pub fn bbwt(w: &[u8]) -> Result<Vec<u8>> {
    non_empty(w)?;
    let factors = duval(w);
    // One copy of each factor word laid out back to back, with its exponent.
    let mut text = Vec::new();
    let mut blocks = Vec::with_capacity(factors.len());
    let mut weight = Vec::new();
    let mut max_len = 0;
    for &(start, len, exponent) in &factors {
        blocks.push((text.len(), len));
        text.extend_from_slice(&w[start..start + len]);
        weight.extend(std::iter::repeat_n(exponent, len));
        max_len = max_len.max(len);
    }
    let mut block_start = vec![0usize; text.len()];
    let mut block_end = vec![0usize; text.len()];
    for &(start, len) in &blocks {
        for p in start..start + len {
            block_start[p] = start;
            block_end[p] = start + len;
        }
    }

    let sorted = omega_sort(&text, &blocks, 2 * max_len);
    let mut out = Vec::with_capacity(w.len());
    for p in sorted {
        let prev = if p == block_start[p] {
            block_end[p] - 1
        } else {
            p - 1
        };
        out.extend(std::iter::repeat_n(text[prev], weight[p]));
    }
    Ok(out)
}

/// Inverse bijective BWT: the Lyndon rotations of all LF cycles,
/// concatenated in non-increasing order.
pub fn ibbwt(x: &[u8]) -> Result<Vec<u8>> {
    let cycles = lf_cycles(x)?;
    let mut words: Vec<Vec<u8>> = cycles.cycles.into_iter().map(|c| c.lyndon).collect();
    words.sort_unstable_by(|a, b| b.cmp(a));
    Ok(words.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::lf_cycles;
    use crate::transforms::naive::{bbwt_naive, bwt_naive, sorted_rotations_naive};

    fn canonical_rotation(w: &[u8]) -> Result<Vec<u8>> {
        Ok(crate::strings::least_rotation(w)?.0)
    }

    const F7: &[u8] = b"abaababaabaababaababa";

    fn binary(n: usize, code: u32) -> Vec<u8> {
        (0..n).map(|j| b'a' + ((code >> j) & 1) as u8).collect()
    }

    #[test]
    fn bwt_examples() {
        assert_eq!(bwt(b"aabab").unwrap(), b"bbaaa");
        assert_eq!(bwt(b"caabaababaabab").unwrap(), b"cbbabaabaaaaab");
        assert_eq!(bwt(b"aaa").unwrap(), b"aaa");
        assert!(bwt(b"").is_err());
    }

    #[test]
    fn ibwt_examples() {
        assert_eq!(ibwt(b"bbaaa").unwrap(), b"aabab");
        assert_eq!(ibwt(b"a").unwrap(), b"a");
        // bwt("abab") = "bbaa": two cycles spelling "ab"
        assert_eq!(ibwt(b"bbaa").unwrap(), b"abab");
        // "ab" is bbwt("ba"), two cycles spelling different words
        assert_eq!(ibwt(b"ab"), Err(Error::NotBwtImage));
        assert_eq!(Error::NotBwtImage.to_string(), "not a BWT image");
    }

    #[test]
    fn bbwt_examples() {
        let w3 = b"baabaababaabab";
        assert_eq!(bbwt(w3).unwrap(), b"bbbbbaaaaaaaab");
        assert_eq!(bbwt(b"ba").unwrap(), b"ab");
        assert_eq!(bbwt(b"abbbaababaaabbaaaaaba").unwrap(), F7);
        assert!(bbwt(b"").is_err());
    }

    #[test]
    fn ibbwt_examples() {
        assert_eq!(ibbwt(F7).unwrap(), b"abbbaababaaabbaaaaaba");
        assert_eq!(ibbwt(b"ab").unwrap(), b"ba");
        assert_eq!(ibbwt(b"z").unwrap(), b"z");
    }

    #[test]
    fn exhaustive_binary_against_naive() {
        for n in 1..=10 {
            for code in 0u32..(1 << n) {
                let w = binary(n, code);
                assert_eq!(bwt(&w).unwrap(), bwt_naive(&w).unwrap(), "{:?}", w);
                assert_eq!(
                    sorted_rotations(&w).unwrap(),
                    sorted_rotations_naive(&w).unwrap()
                );
                assert_eq!(bbwt(&w).unwrap(), bbwt_naive(&w).unwrap(), "{:?}", w);
            }
        }
    }

    #[test]
    fn bbwt_is_bijection_on_each_length() {
        for n in 1..=12 {
            let mut images: Vec<Vec<u8>> = (0u32..(1 << n))
                .map(|code| {
                    let w = binary(n, code);
                    let x = bbwt(&w).unwrap();
                    assert_eq!(ibbwt(&x).unwrap(), w);
                    x
                })
                .collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), 1 << n);
        }
    }

    proptest::proptest! {
        #[test]
        fn bbwt_round_trip(w in proptest::collection::vec(0u8..8, 1..400)) {
            let x = bbwt(&w).unwrap();
            proptest::prop_assert_eq!(&x, &bbwt_naive(&w).unwrap());
            proptest::prop_assert_eq!(ibbwt(&x).unwrap(), w.clone());
            let rot = canonical_rotation(&w).unwrap();
            proptest::prop_assert_eq!(bwt(&w).unwrap(), bbwt(&rot).unwrap());
            proptest::prop_assert_eq!(bwt(&w).unwrap(), bwt_naive(&w).unwrap());
        }

        #[test]
        fn ibwt_inverts_up_to_rotation(w in proptest::collection::vec(0u8..3, 1..200)) {
            let x = bwt(&w).unwrap();
            proptest::prop_assert_eq!(ibwt(&x).unwrap(), canonical_rotation(&w).unwrap());
            if crate::strings::is_primitive(&w).unwrap() {
                proptest::prop_assert_eq!(lf_cycles(&x).unwrap().len(), 1);
            }
        }
    }
}
