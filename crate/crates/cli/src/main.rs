use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mrel::scalar::Rational;
use mrel_cli::config::{default_betas, parse_beta};
use mrel_cli::{emit, run, variants, Mode, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "mrel", version, about = "Verification suites for the pseudo-complex algebra 𝕄 and its relativity model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and emit a JSON report.
    Verify(VerifyArgs),
    /// Print the classification table of the eight sign-variant algebras.
    Variants {
        /// Print the witness behind each flag.
        #[arg(long)]
        witnesses: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run, comma separated. Defaults to all.
    #[arg(long, value_delimiter = ',', default_values_t = Suite::ALL.to_vec())]
    suites: Vec<Suite>,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    #[arg(long, env = "MREL_SEED", default_value_t = 0)]
    seed: u64,
    /// Random cases per check.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Tolerance of the field-calculus checks.
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    /// Relative finite-difference step.
    #[arg(long = "fd-step", default_value_t = 1e-4)]
    fd_step: f64,
    /// Speed ratios for the per-β checks, e.g. 3/5. Repeatable or comma separated.
    #[arg(long = "beta", value_delimiter = ',', value_parser = parse_beta_arg)]
    betas: Vec<Rational>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add wall-clock runtime to the report summary.
    #[arg(long)]
    timing: bool,
}

fn parse_beta_arg(s: &str) -> Result<Rational, String> {
    parse_beta(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Variants { witnesses } => match variants::classify_variants_cmd(witnesses) {
            Ok(table) => {
                print!("{table}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("mrel: {e}");
                ExitCode::from(1)
            }
        },
        Command::Verify(args) => {
            let cfg = SuiteConfig {
                suites: args.suites,
                mode: args.mode,
                seed: args.seed,
                samples: args.samples,
                tol: args.tol,
                fd_step: args.fd_step,
                betas: if args.betas.is_empty() { default_betas() } else { args.betas },
                output_path: args.out,
                timing: args.timing,
            };
            let report = match run(&cfg) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("mrel: {e}");
                    return ExitCode::from(2);
                }
            };
            if let Err(e) = emit(&report, &cfg) {
                eprintln!("mrel: {e}");
                return ExitCode::from(2);
            }
            eprint!("{}", report.human_summary());
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
