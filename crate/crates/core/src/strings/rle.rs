use serde::Serialize;

/// A maximal same-symbol run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Run {
    pub symbol: u8,
    pub count: usize,
}

/// A string stored as its maximal runs; adjacent runs never share a symbol.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunLengthString {
    runs: Vec<Run>,
}

impl RunLengthString {
    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of runs.
    pub fn rho(&self) -> usize {
        self.runs.len()
    }

    /// Number of runs of symbol `c`.
    pub fn rho_of(&self, c: u8) -> usize {
        self.runs.iter().filter(|r| r.symbol == c).count()
    }

    /// Length of the decoded string.
    pub fn len(&self) -> usize {
        self.runs.iter().map(|r| r.count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn decode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.len());
        for r in &self.runs {
            out.extend(std::iter::repeat_n(r.symbol, r.count));
        }
        out
    }
}

pub fn rle(x: &[u8]) -> RunLengthString {
    let mut runs: Vec<Run> = Vec::new();
    for &c in x {
        match runs.last_mut() {
            Some(last) if last.symbol == c => last.count += 1,
            _ => runs.push(Run {
                symbol: c,
                count: 1,
            }),
        }
    }
    RunLengthString { runs }
}

/// Number of maximal runs in `x` without materializing them.
pub fn run_count(x: &[u8]) -> usize {
    if x.is_empty() {
        return 0;
    }
    1 + x.windows(2).filter(|w| w[0] != w[1]).count()
}
