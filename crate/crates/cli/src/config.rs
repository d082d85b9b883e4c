use std::fmt;
use std::path::PathBuf;

use mrel::scalar::{parse_rational, Rational};
use mrel::sampling::PYTHAGOREAN_BETAS;
use mrel::Scalar;
use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Linalg,
    Lorentz,
    Entities,
    Fields,
    Variants,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Algebra, Suite::Linalg, Suite::Lorentz, Suite::Entities, Suite::Fields, Suite::Variants];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Linalg => "linalg",
            Suite::Lorentz => "lorentz",
            Suite::Entities => "entities",
            Suite::Fields => "fields",
            Suite::Variants => "variants",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Arithmetic for the algebraic suites. The fields suite is always
/// floating point and the variants suite always exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("no suites selected")]
    NoSuites,
    #[error("samples must be at least 1")]
    Samples,
    #[error("tolerance must be a positive finite number, got {0}")]
    Tolerance(f64),
    #[error("finite-difference step must be a positive finite number, got {0}")]
    FdStep(f64),
    #[error("speed ratio {0:?} is not a rational in (0, 1)")]
    Beta(String),
    #[error("cannot write report to {path}: {reason}")]
    Output { path: String, reason: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub mode: Mode,
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub fd_step: f64,
    pub betas: Vec<Rational>,
    pub output_path: Option<PathBuf>,
    /// Add wall-clock runtime to the summary. Off by default so that reports
    /// stay byte-identical across runs.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Suite::ALL.to_vec(),
            mode: Mode::Exact,
            seed: 0,
            samples: 100,
            tol: 1e-5,
            fd_step: 1e-4,
            betas: default_betas(),
            output_path: None,
            timing: false,
        }
    }
}

pub fn default_betas() -> Vec<Rational> {
    PYTHAGOREAN_BETAS.iter().map(|&(n, d)| Rational::from_ratio(n, d)).collect()
}

/// Parse a speed ratio such as `3/5` or `0.6`.
pub fn parse_beta(text: &str) -> Result<Rational, ConfigError> {
    let beta = parse_rational(text).ok_or_else(|| ConfigError::Beta(text.to_string()))?;
    if beta <= Rational::from_i64(0) || beta >= Rational::from_i64(1) {
        return Err(ConfigError::Beta(text.to_string()));
    }
    Ok(beta)
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.suites.is_empty() {
            return Err(ConfigError::NoSuites);
        }
        if self.samples == 0 {
            return Err(ConfigError::Samples);
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(ConfigError::Tolerance(self.tol));
        }
        if !(self.fd_step > 0.0 && self.fd_step.is_finite()) {
            return Err(ConfigError::FdStep(self.fd_step));
        }
        for b in &self.betas {
            if *b <= Rational::from_i64(0) || *b >= Rational::from_i64(1) {
                return Err(ConfigError::Beta(b.to_string()));
            }
        }
        Ok(())
    }

    /// Selected suites, deduplicated, in canonical order.
    pub fn selected(&self) -> Vec<Suite> {
        let mut s = self.suites.clone();
        s.sort();
        s.dedup();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        assert_eq!(SuiteConfig::default().validate(), Ok(()));
    }

    #[test]
    fn rejects_bad_values() {
        let base = SuiteConfig::default();
        let cases = [
            SuiteConfig { suites: vec![], ..base.clone() },
            SuiteConfig { samples: 0, ..base.clone() },
            SuiteConfig { tol: 0.0, ..base.clone() },
            SuiteConfig { fd_step: f64::NAN, ..base.clone() },
            SuiteConfig { betas: vec![Rational::from_i64(1)], ..base.clone() },
        ];
        for c in cases {
            assert!(c.validate().is_err());
        }
    }

    #[test]
    fn beta_parsing() {
        assert_eq!(parse_beta("3/5"), Ok(Rational::from_ratio(3, 5)));
        assert_eq!(parse_beta("0.6"), Ok(Rational::from_ratio(3, 5)));
        assert!(parse_beta("5/3").is_err());
        assert!(parse_beta("0").is_err());
        assert!(parse_beta("fast").is_err());
    }

    #[test]
    fn selection_is_canonical() {
        let c = SuiteConfig { suites: vec![Suite::Fields, Suite::Algebra, Suite::Fields], ..Default::default() };
        assert_eq!(c.selected(), vec![Suite::Algebra, Suite::Fields]);
    }
}
