//! Pass/fail certificates attached to reconstructions and consistency checks.
//!
//! Every reconstruction verifies the identities it relies on and records
//! them here rather than trusting its input oracle.

use serde::{Deserialize, Serialize};

/// One named check with its outcome and worst observed deviation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertCheck {
    pub name: String,
    pub pass: bool,
    /// Largest deviation observed, when the check is numeric.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

/// Ordered list of checks; `pass()` is the conjunction.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Certificate {
    pub checks: Vec<CertCheck>,
}

impl Certificate {
    pub fn new() -> Self {
        Certificate { checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(CertCheck { name: name.into(), pass, max_deviation: None, detail: String::new() });
    }

    pub fn push_dev(&mut self, name: impl Into<String>, pass: bool, dev: f64) {
        self.checks.push(CertCheck { name: name.into(), pass, max_deviation: Some(dev), detail: String::new() });
    }

    pub fn push_detail(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CertCheck { name: name.into(), pass, max_deviation: None, detail: detail.into() });
    }

    pub fn merge(&mut self, other: Certificate) {
        self.checks.extend(other.checks);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Name of the first failing check, if any.
    pub fn first_failure(&self) -> Option<&CertCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}
