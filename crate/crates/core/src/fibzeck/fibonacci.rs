use crate::error::{Error, Result};

/// Largest index whose Fibonacci number fits in a `u64`.
pub const MAX_FIB_INDEX: i64 = 91;

/// `f_i` with `f_0 = f_1 = 1` and `f_i = 0` for negative `i`.
///
/// # Panics
///
/// If `i > MAX_FIB_INDEX`.
pub fn fib_num(i: i64) -> u64 {
    assert!(i <= MAX_FIB_INDEX, "f_{i} overflows u64");
    if i < 0 {
        return 0;
    }
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..i {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// `F_0 = b`, `F_1 = a`, `F_i = F_{i-1} F_{i-2}`.
pub fn fib_word(i: usize) -> Vec<u8> {
    let mut older = b"b".to_vec();
    if i == 0 {
        return older;
    }
    let mut newer = b"a".to_vec();
    for _ in 1..i {
        let mut next = Vec::with_capacity(newer.len() + older.len());
        next.extend_from_slice(&newer);
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut newer, next);
    }
    newer
}

fn apply_morphism(w: &[u8], image: impl Fn(u8) -> Option<&'static [u8]>) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &c in w {
        let img = image(c).ok_or(Error::SymbolOutsideDomain(c as char))?;
        out.extend_from_slice(img);
    }
    Ok(out)
}

/// Fibonacci morphism: `a → ab`, `b → a`.
pub fn phi_apply(w: &[u8]) -> Result<Vec<u8>> {
    apply_morphism(w, |c| match c {
        b'a' => Some(b"ab"),
        b'b' => Some(b"a"),
        _ => None,
    })
}

/// `a → aab`, `b → ab`, `c → c`.
pub fn theta_apply(w: &[u8]) -> Result<Vec<u8>> {
    apply_morphism(w, |c| match c {
        b'a' => Some(b"aab"),
        b'b' => Some(b"ab"),
        b'c' => Some(b"c"),
        _ => None,
    })
}

/// Least rotation of `F_{2k}`, built as `θ^k(b)`.
pub fn fib_star(k: usize) -> Vec<u8> {
    let mut w = b"b".to_vec();
    for _ in 0..k {
        w = theta_apply(&w).expect("θ is defined on {a, b}");
    }
    w
}

fn check_family_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "family index k = {k} must be at least 2"
        )));
    }
    Ok(())
}

/// `b · F*_{2k}`: constant r_B, logarithmic r.
pub fn family_w(k: usize) -> Result<Vec<u8>> {
    check_family_k(k)?;
    let mut w = b"b".to_vec();
    w.extend(fib_star(k));
    Ok(w)
}

/// `c · F*_{2k}`.
pub fn family_y(k: usize) -> Result<Vec<u8>> {
    check_family_k(k)?;
    let mut w = b"c".to_vec();
    w.extend(fib_star(k));
    Ok(w)
}

/// Closed form of `bwt(family_y(k))`:
/// `c · b^{f_{2k-2} - k} · ∏_{j=1..k} a^{f_{2j-2}} b`.
pub fn bwt_yk_closed(k: usize) -> Result<Vec<u8>> {
    check_family_k(k)?;
    let k = k as i64;
    let lead = fib_num(2 * k - 2) - k as u64;
    let mut out = b"c".to_vec();
    out.extend(std::iter::repeat_n(b'b', lead as usize));
    for j in 1..=k {
        out.extend(std::iter::repeat_n(b'a', fib_num(2 * j - 2) as usize));
        out.push(b'b');
    }
    Ok(out)
}

/// Offset `i` such that `rot(F_n, i)` has lexicographic rank `rank` among
/// the rotations of `F_n`.
pub fn fib_rotation_rank(n: usize, rank: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} must be at least 2"
        )));
    }
    let len = fib_num(n as i64);
    if rank >= len {
        return Err(Error::OutOfRange {
            index: rank as usize,
            len: len as usize,
        });
    }
    let step = fib_num(n as i64 - 2) as i128;
    let rank = rank as i128;
    let raw = if n % 2 == 1 {
        rank * step - 1
    } else {
        -(rank + 1) * step - 1
    };
    Ok(raw.rem_euclid(len as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::run_count;
    use crate::strings::{least_rotation, rotate};
    use crate::transforms::{bwt, sorted_rotations};

    #[test]
    fn numbers_and_words() {
        assert_eq!(fib_word(4), b"abaab");
        assert_eq!(fib_num(4), 5);
        assert_eq!(fib_num(-1), 0);
        assert_eq!(fib_num(-5), 0);
        assert_eq!(fib_num(0), 1);
        assert_eq!(fib_num(20), 10946);
        assert_eq!(fib_word(0), b"b");
        assert_eq!(fib_word(1), b"a");
        for i in 0..=25 {
            assert_eq!(fib_word(i).len() as u64, fib_num(i as i64));
        }
        for i in 1..=25 {
            let a = fib_word(i).iter().filter(|&&c| c == b'a').count() as u64;
            assert_eq!(a, fib_num(i as i64 - 1));
            let b = fib_word(i).iter().filter(|&&c| c == b'b').count() as u64;
            assert_eq!(b, fib_num(i as i64 - 2));
        }
    }

    #[test]
    #[should_panic]
    fn fib_num_overflow_panics() {
        fib_num(92);
    }

    #[test]
    fn morphisms() {
        assert_eq!(theta_apply(b"b").unwrap(), b"ab");
        assert_eq!(theta_apply(b"cb").unwrap(), b"cab");
        assert_eq!(phi_apply(&phi_apply(b"b").unwrap()).unwrap(), b"ab");
        assert_eq!(phi_apply(b"aba").unwrap(), b"abaab");
        assert_eq!(phi_apply(b"abc"), Err(Error::SymbolOutsideDomain('c')));
        assert!(theta_apply(b"d").is_err());
        for i in 0..15 {
            let mut w = b"b".to_vec();
            for _ in 0..i {
                w = phi_apply(&w).unwrap();
            }
            assert_eq!(w, fib_word(i));
        }
    }

    #[test]
    fn theta_is_rotated_phi_squared() {
        for n in 1..=10 {
            for code in 0u32..(1 << n) {
                let w: Vec<u8> = (0..n).map(|j| b'a' + ((code >> j) & 1) as u8).collect();
                let phi2 = phi_apply(&phi_apply(&w).unwrap()).unwrap();
                assert_eq!(theta_apply(&w).unwrap(), rotate(&phi2, 2).unwrap());
            }
        }
    }

    #[test]
    fn fib_star_examples() {
        assert_eq!(fib_star(0), b"b");
        assert_eq!(fib_star(2), b"aabab");
        for k in 1..=12 {
            assert_eq!(fib_star(k), least_rotation(&fib_word(2 * k)).unwrap().0);
        }
        for k in 2..=12 {
            let shift = fib_num(2 * k as i64 - 1) as isize - 1;
            assert_eq!(fib_star(k), rotate(&fib_word(2 * k), shift).unwrap());
        }
    }

    #[test]
    fn families() {
        assert_eq!(family_y(3).unwrap(), b"caabaababaabab");
        assert_eq!(family_w(3).unwrap(), b"baabaababaabab");
        for k in 2..=10 {
            assert_eq!(family_w(k).unwrap().len() as u64, fib_num(2 * k as i64) + 1);
        }
        assert!(family_w(1).is_err());
        assert!(family_y(0).is_err());
    }

    #[test]
    fn closed_form() {
        assert_eq!(bwt_yk_closed(3).unwrap(), b"cbbabaabaaaaab");
        assert_eq!(bwt_yk_closed(2).unwrap(), b"cabaab");
        assert!(bwt_yk_closed(1).is_err());
        for k in 2..=10 {
            let closed = bwt_yk_closed(k).unwrap();
            assert_eq!(closed, bwt(&family_y(k).unwrap()).unwrap());
            if k >= 3 {
                assert_eq!(run_count(&closed), 2 * k + 2);
            }
        }
        assert_eq!(run_count(&bwt_yk_closed(2).unwrap()), 5);
    }

    #[test]
    fn theta_preserves_order() {
        let mut words = Vec::new();
        for n in 1..=8 {
            for code in 0u32..(1 << n) {
                words.push(
                    (0..n)
                        .map(|j| b'a' + ((code >> j) & 1) as u8)
                        .collect::<Vec<u8>>(),
                );
            }
        }
        let images: Vec<Vec<u8>> = words.iter().map(|w| theta_apply(w).unwrap()).collect();
        for (s, ts) in words.iter().zip(&images) {
            for (t, tt) in words.iter().zip(&images) {
                assert_eq!(s.cmp(t), ts.cmp(tt), "{:?} {:?}", s, t);
            }
        }
    }

    #[test]
    fn rotation_rank() {
        assert_eq!(fib_rotation_rank(4, 0).unwrap(), 2);
        assert_eq!(rotate(&fib_word(4), 2).unwrap(), b"aabab");
        for k in 1..=10 {
            assert_eq!(
                fib_rotation_rank(2 * k, 0).unwrap(),
                fib_num(2 * k as i64 - 1) - 1
            );
        }
        assert!(fib_rotation_rank(1, 0).is_err());
        assert!(fib_rotation_rank(4, 5).is_err());
        for n in 2..=20 {
            let order = sorted_rotations(&fib_word(n)).unwrap();
            for (rank, &offset) in order.iter().enumerate() {
                assert_eq!(fib_rotation_rank(n, rank as u64).unwrap(), offset as u64);
            }
        }
    }
}
