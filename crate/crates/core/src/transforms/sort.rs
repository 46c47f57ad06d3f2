//! Prefix-doubling sort of the rotations of a set of cyclic blocks.
//!
//! Every block `[start, start + len)` of `text` is read cyclically, so the
//! position `p` names the infinite word obtained by starting at `p` and
//! wrapping at the block end. After `r` rounds the rank of `p` encodes the
//! first `2^r` symbols of that word; the caller picks a horizon long enough
//! to separate all distinct words.

/// Positions in ascending order of their infinite words, ties broken by
/// position.
pub(crate) fn omega_sort(text: &[u8], blocks: &[(usize, usize)], horizon: usize) -> Vec<usize> {
    let n = text.len();
    let mut jump: Vec<usize> = (0..n).map(|p| p + 1).collect();
    for &(start, len) in blocks {
        jump[start + len - 1] = start;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&p| (text[p], p));
    let mut rank = vec![0usize; n];
    let mut distinct = dense_ranks(&order, &mut rank, |p| text[p] as usize, |_| 0);

    let mut span = 1;
    while span < horizon && distinct < n {
        let prev = rank.clone();
        order.sort_by_key(|&p| (prev[p], prev[jump[p]], p));
        distinct = dense_ranks(&order, &mut rank, |p| prev[p], |p| prev[jump[p]]);
        jump = jump.iter().map(|&j| jump[j]).collect();
        span *= 2;
    }
    order
}

fn dense_ranks(
    order: &[usize],
    rank: &mut [usize],
    first: impl Fn(usize) -> usize,
    second: impl Fn(usize) -> usize,
) -> usize {
    let mut current = 0;
    let mut last = None;
    for &p in order {
        let key = (first(p), second(p));
        if let Some(prev) = last {
            if prev != key {
                current += 1;
            }
        }
        rank[p] = current;
        last = Some(key);
    }
    if order.is_empty() {
        0
    } else {
        current + 1
    }
}
