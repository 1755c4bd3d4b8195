mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Exact chain-level tools for algebraic 2-complexes over integral group rings.
#[derive(Parser, Debug)]
#[command(name = "d2kit", version)]
pub struct Cli {
    /// Emit one JSON record per line instead of text.
    #[arg(long, global = true)]
    structured: bool,

    /// Omit the timing line, making reports byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the built-in marked groups.
    Catalog,
    /// Build the presentation complex of a presentation file.
    Build {
        presentation: PathBuf,
        /// Where to write the complex; printed to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a complex (or certificate) and report its homology.
    Verify { file: PathBuf },
    /// Euler characteristic, ranks and the inequality checks.
    Invariants { file: PathBuf },
    /// Trade 3-cells for 2-spheres; writes the complex and `<out>.cert`.
    Reduce {
        complex: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a stable equivalence between two 2-complexes.
    Compare {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the certificate, if one is found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a move script on a complex.
    Apply {
        complex: PathBuf,
        script: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let started = std::time::Instant::now();
    match commands::run(&cli.command) {
        Ok(outcome) => {
            let commands::Outcome { mut report, stdout } = outcome;
            if let Some(text) = stdout {
                print!("{text}");
                return ExitCode::from(report.exit_code() as u8);
            }
            if !cli.no_timing {
                report.elapsed_ms = Some(started.elapsed().as_millis());
            }
            if cli.structured {
                print!("{}", report.to_structured());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
