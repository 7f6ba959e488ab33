//! Seeded property suites and witness searches.
//!
//! Every trial draws from its own generator, seeded by `(seed, trial index)`,
//! so trials can run in any order or in parallel and any single trial can be
//! replayed. Violations are collected, never raised.

pub mod gen;
pub mod report;
pub mod suites;
pub mod witness;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{FieldContext, FieldElem};

pub use report::{ConfigSummary, VerificationReport, Violation};
pub use suites::{run_suite, run_trial, Outcome, Suite};
pub use witness::{find_flip_witness, find_witness, Witness, WitnessFamily};

/// `{0, ±1, ±2, ±i, ±r, 1±i, 1±r}`
pub fn default_pool(ctx: FieldContext) -> Vec<FieldElem> {
    ["0", "1", "-1", "2", "-2", "i", "-i", "r", "-r", "1+i", "1-i", "1+r", "1-r"]
        .iter()
        .map(|s| ctx.parse(s).expect("pool literal"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub n: usize,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    pub ctx: FieldContext,
    pub entry_pool: Vec<FieldElem>,
    pub parallel: bool,
}

impl TrialConfig {
    pub fn new(n: usize, k: usize, trials: u64, seed: u64) -> Self {
        let ctx = FieldContext::default();
        TrialConfig { n, k, trials, seed, ctx, entry_pool: default_pool(ctx), parallel: true }
    }

    pub fn with_ctx(mut self, ctx: FieldContext) -> Self {
        self.ctx = ctx;
        self.entry_pool = default_pool(ctx);
        self
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Precondition(format!("dimension {} is below 2", self.n)));
        }
        if self.trials == 0 {
            return Err(Error::Precondition("no trials requested".into()));
        }
        if self.entry_pool.is_empty() {
            return Err(Error::Precondition("empty entry pool".into()));
        }
        if self.entry_pool.iter().any(|x| x.ctx() != self.ctx) {
            return Err(Error::Precondition("entry pool from another field".into()));
        }
        if self.entry_pool.iter().all(FieldElem::is_zero) {
            return Err(Error::Precondition("entry pool has no nonzero entry".into()));
        }
        Ok(())
    }

    pub fn summary(&self) -> ConfigSummary {
        ConfigSummary {
            n: self.n,
            k: self.k,
            trials: self.trials,
            seed: self.seed,
            d: self.ctx.d(),
            entry_pool: self.entry_pool.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Relation of the image spectrum to the original one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preservation {
    Preserved,
    Shrunk,
    Expanded,
    Incomparable,
}

impl Preservation {
    pub fn tag(self) -> &'static str {
        match self {
            Preservation::Preserved => "preserved",
            Preservation::Shrunk => "shrunk",
            Preservation::Expanded => "expanded",
            Preservation::Incomparable => "incomparable",
        }
    }
}
