//! Suite reports in text and JSON.

use std::time::Duration;

use okamoto_algebra::Check;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub topic: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> CheckRecord {
        CheckRecord { id: c.id.clone(), topic: c.topic.clone(), pass: c.pass, witness: c.witness.clone() }
    }
}

/// Outcome of one suite. Field order is fixed, so serialization is
/// deterministic up to the wall time.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    /// Omitted with `timed = false` for byte-stable output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: &[Check], wall: Duration) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            pass: checks.iter().all(|c| c.pass),
            checks: checks.iter().map(CheckRecord::from).collect(),
            wall_ms: Some(wall.as_millis() as u64),
        }
    }

    pub fn untimed(mut self) -> SuiteReport {
        self.wall_ms = None;
        self
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn has_check(&self, id: &str) -> bool {
        self.checks.iter().any(|c| c.id == id)
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut s = String::new();
        for c in self.checks.iter().filter(|c| verbose || !c.pass) {
            s.push_str(&format!("  [{}] {} ({})", if c.pass { "pass" } else { "FAIL" }, c.id, c.topic));
            if let Some(w) = &c.witness {
                s.push_str(&format!(": {w}"));
            }
            s.push('\n');
        }
        let time = self.wall_ms.map(|ms| format!(" in {ms} ms")).unwrap_or_default();
        s.push_str(&format!(
            "{}: {} ({}/{} checks){time}\n",
            self.suite,
            if self.pass { "pass" } else { "FAIL" },
            self.checks.len() - self.failures(),
            self.checks.len()
        ));
        s
    }
}
