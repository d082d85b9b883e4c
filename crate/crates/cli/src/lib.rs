//! Runner for the mrel verification suites: configuration, execution and the
//! JSON report.

pub mod config;
pub mod report;
pub mod suites;
pub mod variants;

use std::time::Instant;

pub use config::{ConfigError, Mode, Suite, SuiteConfig};
pub use report::{Record, Report};

/// Run every selected suite. Suites run on separate threads; the report is
/// sorted by check id, so the output does not depend on scheduling.
pub fn run(cfg: &SuiteConfig) -> Result<Report, ConfigError> {
    cfg.validate()?;
    let start = Instant::now();
    let records = std::thread::scope(|scope| {
        let handles: Vec<_> = cfg
            .selected()
            .into_iter()
            .map(|suite| scope.spawn(move || suites::run_suite(suite, cfg)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect::<Vec<_>>()
    });
    let mut report = Report::new(cfg, records);
    if cfg.timing {
        report.summary.runtime_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

/// Write the report to the configured path, or to standard output.
pub fn emit(report: &Report, cfg: &SuiteConfig) -> Result<(), ConfigError> {
    let json = report.to_json();
    match &cfg.output_path {
        Some(path) => std::fs::write(path, json + "\n").map_err(|e| ConfigError::Output {
            path: path.display().to_string(),
            reason: e.to_string(),
        }),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}
