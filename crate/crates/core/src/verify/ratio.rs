use serde::Serialize;

use crate::error::Result;
use crate::limits::Limits;
use crate::measures::{Measure, MeasureReport};
use crate::transforms::{bbwt, bwt};

/// Measures compared between a string and its transforms.
pub const RATIO_MEASURES: [Measure; 5] = [
    Measure::Delta,
    Measure::Z,
    Measure::V,
    Measure::R,
    Measure::RB,
];

/// One measure of `w`, `bwt(w)` and `bbwt(w)`, with the transformed values
/// divided by the value on `w`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioCell {
    pub measure: &'static str,
    pub source: String,
    pub bwt: String,
    pub bbwt: String,
    pub bwt_ratio: f64,
    pub bbwt_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRow {
    pub name: String,
    pub n: usize,
    pub cells: Vec<RatioCell>,
}

fn numeric(report: &MeasureReport, m: Measure) -> f64 {
    match m {
        Measure::Delta => report
            .delta
            .map_or(0.0, |d| *d.numer() as f64 / *d.denom() as f64),
        _ => report
            .value_string(m)
            .and_then(|s| s.parse::<f64>().ok())
            .unwrap_or(0.0),
    }
}

pub fn ratio_row(name: &str, w: &[u8]) -> Result<RatioRow> {
    let limits = Limits::default();
    let reports = [
        MeasureReport::compute(w, &RATIO_MEASURES, &limits)?,
        MeasureReport::compute(&bwt(w)?, &RATIO_MEASURES, &limits)?,
        MeasureReport::compute(&bbwt(w)?, &RATIO_MEASURES, &limits)?,
    ];
    let cells = RATIO_MEASURES
        .iter()
        .map(|&m| {
            let value = |r: &MeasureReport| r.value_string(m).unwrap_or_default();
            let base = numeric(&reports[0], m);
            RatioCell {
                measure: m.name(),
                source: value(&reports[0]),
                bwt: value(&reports[1]),
                bbwt: value(&reports[2]),
                bwt_ratio: numeric(&reports[1], m) / base,
                bbwt_ratio: numeric(&reports[2], m) / base,
            }
        })
        .collect();
    Ok(RatioRow {
        name: name.to_string(),
        n: w.len(),
        cells,
    })
}

impl RatioRow {
    pub fn csv_header() -> String {
        let mut cols = vec!["name".to_string(), "n".to_string()];
        for m in RATIO_MEASURES {
            for suffix in ["w", "bwt", "bbwt", "bwt_ratio", "bbwt_ratio"] {
                cols.push(format!("{}_{suffix}", m.name()));
            }
        }
        cols.join(",")
    }

    pub fn csv_row(&self) -> String {
        let mut cols = vec![self.name.clone(), self.n.to_string()];
        for c in &self.cells {
            cols.extend([
                c.source.clone(),
                c.bwt.clone(),
                c.bbwt.clone(),
                format!("{:.6}", c.bwt_ratio),
                format!("{:.6}", c.bbwt_ratio),
            ]);
        }
        cols.join(",")
    }
}
