//! Pass/fail reports produced by the theorem checkers.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// One named check with its outcome and a human-readable detail line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// A batch of checks about one subject (a graph, an edge, a family sweep).
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerifyReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }
}

impl core::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "subject: {}", self.subject)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}
