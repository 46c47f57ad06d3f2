use num_rational::Ratio;

use crate::error::{non_empty, Result};

/// Exact value of δ as a reduced fraction.
pub type Delta = Ratio<u64>;

struct State {
    len: usize,
    link: Option<usize>,
    next: Vec<(u8, usize)>,
}

impl State {
    fn go(&self, c: u8) -> Option<usize> {
        self.next.iter().find(|&&(s, _)| s == c).map(|&(_, t)| t)
    }

    fn set(&mut self, c: u8, t: usize) {
        match self.next.iter_mut().find(|(s, _)| *s == c) {
            Some(slot) => slot.1 = t,
            None => self.next.push((c, t)),
        }
    }
}

/// Suffix automaton of `w`; each non-initial state stands for the distinct
/// substrings with lengths in `(len(link), len]`.
fn suffix_automaton(w: &[u8]) -> Vec<State> {
    let mut states = vec![State {
        len: 0,
        link: None,
        next: Vec::new(),
    }];
    let mut last = 0;
    for &c in w {
        let cur = states.len();
        states.push(State {
            len: states[last].len + 1,
            link: None,
            next: Vec::new(),
        });
        let mut p = Some(last);
        while let Some(q) = p {
            if states[q].go(c).is_some() {
                break;
            }
            states[q].set(c, cur);
            p = states[q].link;
        }
        match p {
            None => states[cur].link = Some(0),
            Some(p) => {
                let q = states[p].go(c).unwrap();
                if states[p].len + 1 == states[q].len {
                    states[cur].link = Some(q);
                } else {
                    let clone = states.len();
                    states.push(State {
                        len: states[p].len + 1,
                        link: states[q].link,
                        next: states[q].next.clone(),
                    });
                    let mut r = Some(p);
                    while let Some(s) = r {
                        if states[s].go(c) != Some(q) {
                            break;
                        }
                        states[s].set(c, clone);
                        r = states[s].link;
                    }
                    states[q].link = Some(clone);
                    states[cur].link = Some(clone);
                }
            }
        }
        last = cur;
    }
    states
}

/// `counts[k]` is the number of distinct length-`k` substrings of `w`, for
/// `k` in `0..=|w|` (`counts[0]` is 1, the empty string).
pub fn distinct_substring_counts(w: &[u8]) -> Vec<u64> {
    let n = w.len();
    let mut diff = vec![0i64; n + 2];
    let states = suffix_automaton(w);
    for state in states.iter().skip(1) {
        let shortest = states[state.link.expect("non-initial states have links")].len + 1;
        diff[shortest] += 1;
        diff[state.len + 1] -= 1;
    }
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    let mut running = 0i64;
    for k in 1..=n {
        running += diff[k];
        counts[k] = running as u64;
    }
    counts
}

/// δ(w) = max over k of (distinct length-k substrings) / k.
pub fn delta(w: &[u8]) -> Result<Delta> {
    non_empty(w)?;
    let counts = distinct_substring_counts(w);
    Ok((1..=w.len())
        .map(|k| Ratio::new(counts[k], k as u64))
        .max()
        .expect("non-empty"))
}
