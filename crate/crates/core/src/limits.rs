use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Search limits and randomization settings shared by measure reports and
/// verification suites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Longest input for the γ search.
    pub gamma_max_n: usize,
    /// Largest attractor size tried by the γ search.
    pub gamma_max_size: usize,
    /// Longest input for the exhaustive b search.
    pub b_max_n: usize,
    /// Random cases per randomized check.
    pub trials: usize,
    pub seed: u64,
    /// Overrides each suite's largest family parameter.
    pub max_k: Option<usize>,
    /// Overrides each suite's exhaustive string length.
    pub max_n: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            gamma_max_n: 40,
            gamma_max_size: 6,
            b_max_n: super::measures::DEFAULT_B_MAX_N,
            trials: 10_000,
            seed: 0,
            max_k: None,
            max_n: None,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("gamma_max_n", self.gamma_max_n),
            ("gamma_max_size", self.gamma_max_size),
            ("b_max_n", self.b_max_n),
            ("trials", self.trials),
            ("max_k", self.max_k.unwrap_or(1)),
            ("max_n", self.max_n.unwrap_or(1)),
        ];
        match positive.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(Error::InvalidArgument(format!("{name} must be positive"))),
            None => Ok(()),
        }
    }
}
