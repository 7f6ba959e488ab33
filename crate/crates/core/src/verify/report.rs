use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::formats::{MapFile, TupleFile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigSummary {
    pub n: usize,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    pub d: u32,
    pub entry_pool: Vec<String>,
}

/// A failed trial with enough data to replay it: the suite seed and trial
/// index, plus the offending tuple and map when there are any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub seed: u64,
    pub trial: u64,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tuple: Option<TupleFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub config: ConfigSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapFile>,
    pub trials: u64,
    pub skipped: u64,
    pub tally: BTreeMap<String, u64>,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

impl VerificationReport {
    /// Trials that ran and did not violate the property.
    pub fn passing(&self) -> u64 {
        self.trials - self.skipped - self.violations.len() as u64
    }

    pub fn checked(&self) -> u64 {
        self.trials - self.skipped
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Closing line: `passed X/Y` or `failed X/Y` over the non-skipped trials.
    pub fn status_line(&self) -> String {
        let word = if self.passed { "passed" } else { "failed" };
        format!("{word} {}/{}", self.passing(), self.checked())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "suite {} (n = {}, k = {}, trials = {}, seed = {}, d = {})",
            self.suite, c.n, c.k, c.trials, c.seed, c.d
        )?;
        for (tag, count) in &self.tally {
            writeln!(f, "  {tag}: {count}")?;
        }
        if self.skipped > 0 {
            writeln!(f, "  skipped: {}", self.skipped)?;
        }
        for v in &self.violations {
            writeln!(f, "violation at trial {} (seed {}): {}", v.trial, v.seed, v.message)?;
        }
        write!(f, "{}", self.status_line())
    }
}
