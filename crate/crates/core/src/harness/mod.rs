//! Verification campaigns, appendix fixtures, and export formats.
//!
//! Campaigns fan out over instances (orientations, trees, sample pairs) on a
//! dedicated rayon pool. Results are collected in input order and failures
//! are sorted before a report is built, so a report does not depend on the
//! worker count.

pub mod appendix;
pub mod campaigns;
pub mod dot;
pub mod oracle;

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::enumeration::EnumerationError;

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "CORDIAL_WORKERS";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Appendix(#[from] appendix::AppendixError),
    #[error("{0}")]
    InvalidArgument(String),
}

/// Number of worker threads a campaign runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Workers(usize);

impl Workers {
    pub fn new(count: usize) -> Self {
        Self(count.max(1))
    }

    /// `CORDIAL_WORKERS` if set to a positive integer, otherwise the
    /// available parallelism.
    pub fn from_env() -> Self {
        std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .map(Self::new)
            .unwrap_or_else(|| {
                Self::new(std::thread::available_parallelism().map_or(1, usize::from))
            })
    }

    pub fn count(&self) -> usize {
        self.0
    }

    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.0)
            .build()
            .expect("failed to start worker pool")
            .install(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub instance: String,
    pub detail: String,
}

impl Failure {
    pub fn new(instance: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            instance: instance.into(),
            detail: detail.into(),
        }
    }
}

/// Outcome of one campaign. The verdict is PASS exactly when `failures` is
/// empty. `elapsed` is left out of the JSON form so that reports compare
/// byte for byte across runs.
#[derive(Debug, Clone)]
pub struct CampaignReport {
    pub campaign: String,
    pub parameters: Vec<(String, String)>,
    pub instances_checked: u64,
    pub failures: Vec<Failure>,
    pub observations: Vec<(String, String)>,
    pub elapsed: Duration,
}

struct Pairs<'a>(&'a [(String, String)]);

impl Serialize for Pairs<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for CampaignReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CampaignReport", 6)?;
        s.serialize_field("campaign", &self.campaign)?;
        s.serialize_field("parameters", &Pairs(&self.parameters))?;
        s.serialize_field("instances_checked", &self.instances_checked)?;
        s.serialize_field("failures", &self.failures)?;
        s.serialize_field("pass", &self.pass())?;
        s.serialize_field("observations", &Pairs(&self.observations))?;
        s.end()
    }
}

impl CampaignReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.pass() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn observation(&self, key: &str) -> Option<&str> {
        self.observations
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "campaign: {}", self.campaign)?;
        if !self.parameters.is_empty() {
            let params: Vec<String> = self
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(f, "parameters: {}", params.join(" "))?;
        }
        writeln!(f, "instances checked: {}", self.instances_checked)?;
        for (k, v) in &self.observations {
            writeln!(f, "  {k}: {v}")?;
        }
        for failure in &self.failures {
            writeln!(f, "  FAIL {}: {}", failure.instance, failure.detail)?;
        }
        write!(f, "verdict: {}", self.verdict())
    }
}

/// Accumulates a report; failures are sorted when the report is finished.
pub(crate) struct ReportBuilder {
    campaign: String,
    parameters: Vec<(String, String)>,
    instances: u64,
    failures: Vec<Failure>,
    observations: Vec<(String, String)>,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(campaign: &str) -> Self {
        Self {
            campaign: campaign.to_string(),
            parameters: Vec::new(),
            instances: 0,
            failures: Vec::new(),
            observations: Vec::new(),
            started: Instant::now(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.push((key.to_string(), value.to_string()));
        self
    }

    pub(crate) fn checked(&mut self, count: u64) {
        self.instances += count;
    }

    pub(crate) fn fail(&mut self, failure: Failure) {
        self.failures.push(failure);
    }

    pub(crate) fn observe(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.observations.push((key.into(), value.to_string()));
    }

    pub(crate) fn finish(mut self) -> CampaignReport {
        self.failures.sort();
        CampaignReport {
            campaign: self.campaign,
            parameters: self.parameters,
            instances_checked: self.instances,
            failures: self.failures,
            observations: self.observations,
            elapsed: self.started.elapsed(),
        }
    }
}

/// Joins displayable items with `sep`.
pub(crate) fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    let mut out = String::new();
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        let _ = write!(out, "{item}");
    }
    out
}
