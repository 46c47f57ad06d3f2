use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;

use super::{b_exact, delta, gamma_exact, r_runs, rb_runs, v_measure, z_measure, Bounded, Delta};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Delta,
    Gamma,
    B,
    V,
    Z,
    R,
    RB,
}

impl Measure {
    pub const ALL: [Measure; 7] = [
        Measure::Delta,
        Measure::Gamma,
        Measure::B,
        Measure::V,
        Measure::Z,
        Measure::R,
        Measure::RB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Delta => "delta",
            Measure::Gamma => "gamma",
            Measure::B => "b",
            Measure::V => "v",
            Measure::Z => "z",
            Measure::R => "r",
            Measure::RB => "rB",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "delta" | "δ" => Ok(Measure::Delta),
            "gamma" | "γ" => Ok(Measure::Gamma),
            "b" => Ok(Measure::B),
            "v" => Ok(Measure::V),
            "z" => Ok(Measure::Z),
            "r" => Ok(Measure::R),
            "rb" | "r_b" => Ok(Measure::RB),
            other => Err(Error::InvalidArgument(format!("unknown measure {other:?}"))),
        }
    }
}

fn serialize_delta<S: Serializer>(d: &Option<Delta>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_str(&d.to_string()),
        None => s.serialize_none(),
    }
}

/// One row of measures for a string. Measures that were not requested are
/// `None` and left out of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasureReport {
    pub n: usize,
    pub sigma: usize,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_delta"
    )]
    pub delta: Option<Delta>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Bounded>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Bounded>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(rename = "rB", skip_serializing_if = "Option::is_none")]
    pub r_b: Option<usize>,
}

impl MeasureReport {
    /// Computes the requested measures. The empty string reports zero for
    /// every measure.
    pub fn compute(w: &[u8], set: &[Measure], limits: &Limits) -> Result<Self> {
        let mut symbols = [false; 256];
        for &c in w {
            symbols[c as usize] = true;
        }
        let mut report = MeasureReport {
            n: w.len(),
            sigma: symbols.iter().filter(|&&s| s).count(),
            delta: None,
            gamma: None,
            b: None,
            v: None,
            z: None,
            r: None,
            r_b: None,
        };
        let empty = w.is_empty();
        for &m in set {
            match m {
                Measure::Delta => {
                    report.delta = Some(if empty {
                        Ratio::from_integer(0)
                    } else {
                        delta(w)?
                    })
                }
                Measure::Gamma => {
                    report.gamma = Some(gamma_exact(w, limits.gamma_max_n, limits.gamma_max_size))
                }
                Measure::B => report.b = Some(b_exact(w, limits.b_max_n)),
                Measure::V => report.v = Some(if empty { 0 } else { v_measure(w)? }),
                Measure::Z => report.z = Some(if empty { 0 } else { z_measure(w)? }),
                Measure::R => report.r = Some(if empty { 0 } else { r_runs(w)? }),
                Measure::RB => report.r_b = Some(if empty { 0 } else { rb_runs(w)? }),
            }
        }
        Ok(report)
    }

    pub fn csv_header(set: &[Measure]) -> String {
        let mut cols = vec!["n".to_string(), "sigma".to_string()];
        cols.extend(set.iter().map(|m| m.name().to_string()));
        cols.join(",")
    }

    pub fn csv_row(&self, set: &[Measure]) -> String {
        let mut cols = vec![self.n.to_string(), self.sigma.to_string()];
        for &m in set {
            cols.push(self.value_string(m).unwrap_or_default());
        }
        cols.join(",")
    }

    /// Display form of one measure, if it was computed.
    pub fn value_string(&self, m: Measure) -> Option<String> {
        match m {
            Measure::Delta => self.delta.map(|d| d.to_string()),
            Measure::Gamma => self.gamma.map(|g| g.to_string()),
            Measure::B => self.b.map(|b| b.to_string()),
            Measure::V => self.v.map(|v| v.to_string()),
            Measure::Z => self.z.map(|v| v.to_string()),
            Measure::R => self.r.map(|v| v.to_string()),
            Measure::RB => self.r_b.map(|v| v.to_string()),
        }
    }
}

/// Every measure of `w` under `limits`.
pub fn measure_report(w: &[u8], limits: &Limits) -> Result<MeasureReport> {
    MeasureReport::compute(w, &Measure::ALL, limits)
}
