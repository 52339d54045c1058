//! Named pass/fail records produced by verification routines.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    /// Short description of what is being verified.
    pub topic: String,
    pub pass: bool,
    /// Offending entry or expression when the check fails.
    pub witness: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, topic: impl Into<String>, pass: bool) -> Check {
        Check { id: id.into(), topic: topic.into(), pass, witness: None }
    }

    /// A check that fails with `witness` when `witness` is `Some`.
    pub fn from_witness(id: impl Into<String>, topic: impl Into<String>, witness: Option<String>) -> Check {
        Check { id: id.into(), topic: topic.into(), pass: witness.is_none(), witness }
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Check {
        if !self.pass {
            self.witness = Some(w.into());
        }
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({})", if self.pass { "pass" } else { "FAIL" }, self.id, self.topic)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// True when every check passed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
