//! Pass/fail records for checked identities.

use std::fmt;

use crate::error::AlgebraError;
use crate::SuperMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Canonical rendering of `lhs - rhs` (or a short reason) on failure.
    pub residual: Option<String>,
}

/// Ordered list of checked identities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub title: String,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Structured,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), checks: Vec::new() }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(CheckOutcome { name: name.into(), passed: true, residual: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, residual: impl Into<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed: false,
            residual: Some(residual.into()),
        });
    }

    pub fn record(&mut self, name: impl Into<String>, ok: bool, residual: impl FnOnce() -> String) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, residual());
        }
    }

    /// Records `lhs == rhs` for two super matrices, rendering the difference
    /// on failure.
    pub fn check_matrix_eq(
        &mut self,
        name: impl Into<String>,
        lhs: &SuperMatrix,
        rhs: &SuperMatrix,
    ) -> Result<(), AlgebraError> {
        let diff = lhs.sub(rhs)?;
        self.record(name, diff.is_zero(), || diff.to_string());
        Ok(())
    }

    pub fn check_matrix_zero(&mut self, name: impl Into<String>, m: &SuperMatrix) {
        self.record(name, m.is_zero(), || m.to_string());
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render(&self, format: ReportFormat) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let residual = c.residual.as_deref().map(one_line);
            match format {
                ReportFormat::Text => {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    out.push_str(&format!("{status} {}", c.name));
                    if let Some(r) = residual {
                        out.push_str(&format!(" :: {r}"));
                    }
                }
                ReportFormat::Structured => {
                    let status = if c.passed { "pass" } else { "fail" };
                    out.push_str(&format!(
                        "report={} check={} status={status}",
                        quote(&self.title),
                        quote(&c.name)
                    ));
                    if let Some(r) = residual {
                        out.push_str(&format!(" residual={}", quote(&r)));
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

fn one_line(s: &str) -> String {
    s.split('\n').map(str::trim).collect::<Vec<_>>().join(" ")
}

fn quote(s: &str) -> String {
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || "_-.:()/+".contains(c)) {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(ReportFormat::Text))
    }
}
