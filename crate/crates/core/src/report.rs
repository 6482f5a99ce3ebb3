use serde::Serialize;

/// Outcome of a bounded verification: how many checks ran and which failed.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks_run: usize,
    pub violation_count: usize,
    /// The first violations found, each with a witness.
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub clause: String,
    pub witness: String,
}

const MAX_RECORDED: usize = 64;

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// Records one check; `witness` is only evaluated when the check fails.
    pub fn check(&mut self, ok: bool, clause: &str, witness: impl FnOnce() -> String) {
        self.checks_run += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < MAX_RECORDED {
                self.violations.push(Violation { clause: clause.to_string(), witness: witness() });
            }
        }
    }

    pub fn has_clause(&self, clause: &str) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{}: {verdict} ({} checks, {} violations)", self.subject, self.checks_run, self.violation_count)?;
        for v in &self.violations {
            write!(f, "\n  {}: {}", v.clause, v.witness)?;
        }
        Ok(())
    }
}
