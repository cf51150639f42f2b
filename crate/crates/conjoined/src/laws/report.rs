//! Structured law-check results and their JSON rendering.
//!
//! A [`LawReport`] is the outcome of running one suite (a selection of
//! laws) against one adapter: a per-law pass/fail summary plus the full
//! detail of every failing case. Serialization is stable: field order is
//! fixed as `{adapter, cases_per_law, laws, failures}`, with failures as
//! `{law, seed, lhs, rhs}`, so identical runs serialize byte-identically.

use serde::Serialize;

/// Whether one generated case satisfied its law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Both observations were equivalent.
    Pass,
    /// The observations differed; both sides are recorded.
    Fail,
}

/// One executed law case. The seed stored is the derived case seed:
/// replaying the same law at this seed reproduces the very same inputs
/// and verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCase {
    /// Which law the case exercised.
    #[serde(rename = "law")]
    pub law_id: String,
    /// The derived case seed.
    pub seed: u64,
    /// The verdict; failures carry both observations below.
    #[serde(skip)]
    pub verdict: Verdict,
    /// Rendered left-hand observation, present on failure.
    #[serde(rename = "lhs", skip_serializing_if = "Option::is_none")]
    pub lhs_obs: Option<String>,
    /// Rendered right-hand observation, present on failure.
    #[serde(rename = "rhs", skip_serializing_if = "Option::is_none")]
    pub rhs_obs: Option<String>,
}

impl LawCase {
    /// A passing case; observations are dropped.
    pub fn pass(law_id: impl Into<String>, seed: u64) -> Self {
        LawCase {
            law_id: law_id.into(),
            seed,
            verdict: Verdict::Pass,
            lhs_obs: None,
            rhs_obs: None,
        }
    }

    /// A failing case carrying both rendered observations.
    pub fn fail(law_id: impl Into<String>, seed: u64, lhs: String, rhs: String) -> Self {
        LawCase {
            law_id: law_id.into(),
            seed,
            verdict: Verdict::Fail,
            lhs_obs: Some(lhs),
            rhs_obs: Some(rhs),
        }
    }
}

/// Per-law pass/fail tally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawLine {
    /// The law's identifier.
    pub id: String,
    /// Passing case count.
    pub pass: u64,
    /// Failing case count.
    pub fail: u64,
}

/// The result of running one suite of laws against one adapter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    /// Which adapter ran.
    #[serde(rename = "adapter")]
    pub adapter_name: String,
    /// Cases attempted per law.
    pub cases_per_law: u64,
    /// One tally per law, in suite order.
    #[serde(rename = "laws")]
    pub results: Vec<LawLine>,
    /// Every failing case, in discovery order.
    pub failures: Vec<LawCase>,
}

impl LawReport {
    /// An empty report for the given adapter and budget.
    pub fn new(adapter_name: impl Into<String>, cases_per_law: u64) -> Self {
        LawReport {
            adapter_name: adapter_name.into(),
            cases_per_law,
            results: Vec::new(),
            failures: Vec::new(),
        }
    }

    /// Appends one law's tally and its failing cases.
    pub fn push_law(&mut self, id: impl Into<String>, pass: u64, fail: u64, failures: Vec<LawCase>) {
        self.results.push(LawLine {
            id: id.into(),
            pass,
            fail,
        });
        self.failures.extend(failures);
    }

    /// Whether every case of every law passed.
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty() && self.results.iter().all(|line| line.fail == 0)
    }

    /// Total cases executed across all laws.
    pub fn total_cases(&self) -> u64 {
        self.results.iter().map(|line| line.pass + line.fail).sum()
    }

    /// Stable JSON rendering of this report.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

/// Stable JSON rendering of a whole suite run.
pub fn suite_to_json(reports: &[LawReport]) -> String {
    serde_json::to_string(reports).expect("report serialization is infallible")
}
