//! Verification suites with machine-readable reports, and the empirical
//! ratio report.

mod ratio;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;

pub use ratio::{ratio_row, RatioCell, RatioRow, RATIO_MEASURES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Roundtrip,
    Clustering,
    PsiRot,
    RankFormula,
    Necklace,
    BwtYk,
    Separation,
    Hierarchy,
    Morphism,
    DeltaFib,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Roundtrip,
        Suite::Clustering,
        Suite::PsiRot,
        Suite::RankFormula,
        Suite::Necklace,
        Suite::BwtYk,
        Suite::Separation,
        Suite::Hierarchy,
        Suite::Morphism,
        Suite::DeltaFib,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Clustering => "clustering",
            Suite::PsiRot => "psi-rot",
            Suite::RankFormula => "rank-formula",
            Suite::Necklace => "necklace",
            Suite::BwtYk => "bwt-yk",
            Suite::Separation => "separation",
            Suite::Hierarchy => "hierarchy",
            Suite::Morphism => "morphism",
            Suite::DeltaFib => "delta-fib",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyCase {
    pub id: usize,
    pub input_desc: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub limits: Limits,
    pub cases: Vec<VerifyCase>,
    pub passed: usize,
    pub total: usize,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    /// Zeroes the wall time so that reruns compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

/// Collects cases in id order.
#[derive(Debug, Default)]
pub(crate) struct Cases {
    cases: Vec<VerifyCase>,
}

impl Cases {
    pub fn push(
        &mut self,
        input_desc: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        pass: bool,
    ) {
        self.cases.push(VerifyCase {
            id: self.cases.len(),
            input_desc: input_desc.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    pub fn push_eq(
        &mut self,
        input_desc: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) {
        let (e, a) = (expected.to_string(), actual.to_string());
        let pass = e == a;
        self.push(input_desc, e, a, pass);
    }

    pub fn push_tally(&mut self, input_desc: impl fmt::Display, tally: Tally) {
        let desc = format!("{input_desc} ({} checks)", tally.checked);
        let actual = match &tally.first {
            Some(first) => format!("{} mismatches, first: {first}", tally.failures),
            None => "0 mismatches".to_string(),
        };
        let pass = tally.failures == 0;
        self.push(desc, "0 mismatches", actual, pass);
    }
}

/// Counts checks and remembers the first failure.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    checked: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }
}

/// Runs one suite. Every random choice comes from `limits.seed`.
pub fn run_suite(suite: Suite, limits: &Limits) -> Result<VerifyReport> {
    limits.validate()?;
    let start = Instant::now();
    let mut cases = Cases::default();
    match suite {
        Suite::Roundtrip => suites::roundtrip(limits, &mut cases)?,
        Suite::Clustering => suites::clustering(limits, &mut cases)?,
        Suite::PsiRot => suites::psi_rot(limits, &mut cases)?,
        Suite::RankFormula => suites::rank_formula(limits, &mut cases)?,
        Suite::Necklace => suites::necklace(limits, &mut cases)?,
        Suite::BwtYk => suites::bwt_yk(limits, &mut cases)?,
        Suite::Separation => suites::separation(limits, &mut cases)?,
        Suite::Hierarchy => suites::hierarchy(limits, &mut cases)?,
        Suite::Morphism => suites::morphism(limits, &mut cases)?,
        Suite::DeltaFib => suites::delta_fib(limits, &mut cases)?,
    }
    let cases = cases.cases;
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        seed: limits.seed,
        limits: limits.clone(),
        passed: cases.iter().filter(|c| c.pass).count(),
        total: cases.len(),
        cases,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Short display form of a byte string.
pub(crate) fn summarize(w: &[u8]) -> String {
    const SHOWN: usize = 48;
    let text = String::from_utf8_lossy(&w[..w.len().min(SHOWN)]).into_owned();
    if w.len() > SHOWN {
        format!("{text}... ({} bytes)", w.len())
    } else {
        text
    }
}
