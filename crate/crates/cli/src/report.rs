use std::fmt::Debug;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::{Mode, Suite, SuiteConfig};

pub const SCHEMA: &str = "mrel-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    /// Pass when `residual <= tolerance`.
    Le,
    /// Pass when `residual > tolerance`.
    Gt,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub check_id: String,
    /// The relation being checked, as a formula.
    pub anchor: String,
    /// SHA-256 over the debug rendering of every input case.
    pub inputs_digest: String,
    pub cases: usize,
    /// Worst residual over all cases; `None` if a case raised an error.
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub comparison: Comparison,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub suites: Vec<Suite>,
    pub mode: Mode,
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub fd_step: f64,
    pub betas: Vec<String>,
}

impl From<&SuiteConfig> for ConfigEcho {
    fn from(c: &SuiteConfig) -> Self {
        ConfigEcho {
            suites: c.selected(),
            mode: c.mode,
            seed: c.seed,
            samples: c.samples,
            tol: c.tol,
            fd_step: c.fd_step,
            betas: c.betas.iter().map(|b| b.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: Tool,
    pub config: ConfigEcho,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    /// Sorts records by id and fills in the summary.
    pub fn new(cfg: &SuiteConfig, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let passed = records.iter().filter(|r| r.pass).count();
        Report {
            schema: SCHEMA,
            tool: Tool { name: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION") },
            config: cfg.into(),
            summary: Summary { total: records.len(), passed, failed: records.len() - passed, runtime_ms: None },
            records,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn human_summary(&self) -> String {
        let mut out = format!(
            "mrel: {} checks, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        );
        for r in self.failures() {
            let residual = r.residual.map_or("error".to_string(), |v| format!("{v:e}"));
            out.push_str(&format!("  FAIL {} residual {} tolerance {:e}", r.check_id, residual, r.tolerance));
            if let Some(d) = &r.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        out
    }
}

/// Accumulates the cases of one check into a [`Record`].
pub struct Check {
    id: String,
    anchor: String,
    tolerance: f64,
    comparison: Comparison,
    digest: Sha256,
    cases: usize,
    worst: f64,
    error: Option<String>,
    detail: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, tolerance: f64) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            tolerance,
            comparison: Comparison::Le,
            digest: Sha256::new(),
            cases: 0,
            worst: 0.0,
            error: None,
            detail: None,
        }
    }

    /// A check that passes when the residual exceeds `threshold`.
    pub fn above(id: impl Into<String>, anchor: impl Into<String>, threshold: f64) -> Self {
        Check { comparison: Comparison::Gt, worst: f64::INFINITY, ..Check::new(id, anchor, threshold) }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn input(&mut self, inputs: &impl Debug) {
        self.digest.update(format!("{inputs:?}\n").as_bytes());
    }

    pub fn observe(&mut self, residual: f64) {
        self.cases += 1;
        self.worst = match self.comparison {
            // NaN is kept so that it fails the comparison
            Comparison::Le if residual.is_nan() || self.worst.is_nan() => f64::NAN,
            Comparison::Le => self.worst.max(residual),
            Comparison::Gt if residual.is_nan() || self.worst.is_nan() => f64::NAN,
            Comparison::Gt => self.worst.min(residual),
        };
    }

    /// Record one case from a fallible computation.
    pub fn outcome(&mut self, result: Result<f64, mrel::Error>) {
        match result {
            Ok(r) => self.observe(r),
            Err(e) => self.fail(e.to_string()),
        }
    }

    pub fn fail(&mut self, message: impl Into<String>) {
        self.cases += 1;
        if self.error.is_none() {
            self.error = Some(message.into());
        }
    }

    pub fn failed(&self) -> bool {
        self.error.is_some()
    }

    pub fn detail(&mut self, text: impl Into<String>) {
        self.detail = Some(text.into());
    }

    pub fn finish(self) -> Record {
        let non_finite = self.worst.is_nan();
        let residual = if self.error.is_some() || self.cases == 0 || non_finite { None } else { Some(self.worst) };
        let pass = match (residual, self.comparison) {
            (Some(r), Comparison::Le) => r <= self.tolerance,
            (Some(r), Comparison::Gt) => r > self.tolerance,
            (None, _) => false,
        };
        let detail = match (self.error, self.detail, self.cases) {
            (Some(e), _, _) => Some(e),
            (None, _, 0) => Some("no cases evaluated".to_string()),
            (None, _, _) if non_finite => Some("non-finite residual".to_string()),
            (None, d, _) => d,
        };
        Record {
            check_id: self.id,
            anchor: self.anchor,
            inputs_digest: hex::encode(self.digest.finalize()),
            cases: self.cases,
            residual,
            tolerance: self.tolerance,
            comparison: self.comparison,
            pass,
            detail,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_case_decides() {
        let mut c = Check::new("m.op.case", "a = b", 1e-3);
        c.input(&1);
        c.observe(1e-6);
        c.observe(5e-4);
        let r = c.finish();
        assert!(r.pass);
        assert_eq!(r.residual, Some(5e-4));
        assert_eq!(r.cases, 2);
        assert_eq!(r.inputs_digest.len(), 64);
    }

    #[test]
    fn errors_fail_the_record() {
        let mut c = Check::new("m.op.case", "a = b", 1.0);
        c.observe(0.0);
        c.outcome(Err(mrel::Error::ZeroVelocity));
        let r = c.finish();
        assert!(!r.pass);
        assert_eq!(r.residual, None);
        assert!(r.detail.unwrap().contains("nonzero"));
    }

    #[test]
    fn nan_never_passes() {
        let mut c = Check::new("m.op.case", "a = b", 1.0);
        c.observe(f64::NAN);
        c.observe(0.0);
        assert!(!c.finish().pass);
    }

    #[test]
    fn lower_bounds() {
        let mut c = Check::above("m.op.case", "gap > 0", 0.01);
        c.observe(0.5);
        c.observe(0.2);
        let r = c.finish();
        assert!(r.pass);
        assert_eq!(r.residual, Some(0.2));
    }

    #[test]
    fn empty_checks_fail() {
        assert!(!Check::new("m.op.case", "a = b", 1.0).finish().pass);
    }

    #[test]
    fn summary_counts_match() {
        let mut bad = Check::new("b.op.case", "x", 0.0);
        bad.observe(1.0);
        let mut good = Check::new("a.op.case", "x", 0.0);
        good.observe(0.0);
        let report = Report::new(&SuiteConfig::default(), vec![bad.finish(), good.finish()]);
        assert_eq!(report.records[0].check_id, "a.op.case");
        assert_eq!((report.summary.total, report.summary.passed, report.summary.failed), (2, 1, 1));
        assert!(report.human_summary().contains("FAIL b.op.case"));
    }
}
