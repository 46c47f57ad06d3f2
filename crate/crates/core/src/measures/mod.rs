//! Repetitiveness measures and macro-scheme machinery.
//!
//! δ, z, v, r and r_B are computed exactly at any length. γ and b come from
//! exhaustive searches and report [`Bounded::LimitExceeded`] past their
//! limits.

mod attractor;
mod bms_search;
mod delta;
mod lexparse;
mod lz77;
mod report;
mod scheme;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::strings::run_count;
use crate::transforms::{bbwt, bwt};

pub use attractor::{attractor_valid, gamma_exact, smallest_attractor, AttractorSet};
pub use bms_search::{b_exact, smallest_bms, DEFAULT_B_MAX_N};
pub use delta::{delta, distinct_substring_counts, Delta};
pub use lexparse::{lexparse, v_measure};
pub use lz77::{lz77, z_measure};
pub use report::{measure_report, Measure, MeasureReport};
pub use scheme::{bms_rotate, bms_valid, MacroScheme, Phrase};

/// Result of a search that may give up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bounded {
    Exact(usize),
    LimitExceeded,
}

impl Bounded {
    pub fn exact(self) -> Option<usize> {
        match self {
            Bounded::Exact(v) => Some(v),
            Bounded::LimitExceeded => None,
        }
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exact(v) => write!(f, "{v}"),
            Bounded::LimitExceeded => f.write_str("limit-exceeded"),
        }
    }
}

impl Serialize for Bounded {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Bounded::Exact(v) => s.serialize_u64(*v as u64),
            Bounded::LimitExceeded => s.serialize_str("limit-exceeded"),
        }
    }
}

/// r(w): runs in the BWT of `w`.
pub fn r_runs(w: &[u8]) -> Result<usize> {
    Ok(run_count(&bwt(w)?))
}

/// r_B(w): runs in the bijective BWT of `w`.
pub fn rb_runs(w: &[u8]) -> Result<usize> {
    Ok(run_count(&bbwt(w)?))
}
