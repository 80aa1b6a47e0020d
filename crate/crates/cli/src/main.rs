//! `wheeldist`: exact wheel-graph distance matrices and their verification.
//!
//! Exit codes: 0 success, 1 at least one check failed, 2 usage error,
//! 3 I/O error.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use report::{run_verification, RunConfig};
use wheeldist::encode::{matrix_to_csv, matrix_to_json};
use wheeldist::spectra::DEFAULT_ZERO_TOL;
use wheeldist::theorems::{closed_form_inverse, pseudo_inverse_from_distance};
use wheeldist::{distance_matrix, special_laplacian, spectrum_report, Matrix};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "wheeldist",
    version,
    about = "Exact wheel-graph distance matrices, their closed-form inverses, and a verification suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit one exact object as JSON or CSV
    Gen {
        /// Number of vertices (hub plus rim); at least 4
        #[arg(long)]
        n: usize,
        /// Which object to emit
        #[arg(long, value_enum)]
        what: What,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and emit a JSON report
    Verify {
        /// Single size to verify (conflicts with --n-min/--n-max)
        #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
        n: Option<usize>,
        /// Smallest size of the sweep
        #[arg(long, requires = "n_max")]
        n_min: Option<usize>,
        /// Largest size of the sweep
        #[arg(long, requires = "n_min")]
        n_max: Option<usize>,
        /// Largest size the O(n^3) rational oracles run at
        #[arg(long, default_value_t = 64)]
        oracle_cutoff: usize,
        /// Override both relative spectral tolerances
        #[arg(long)]
        tol: Option<f64>,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues of one even wheel's matrices as JSON
    Spectrum {
        /// Number of vertices; even, at least 4
        #[arg(long)]
        n: usize,
        /// Relative tolerance used to flag near-zero eigenvalues
        #[arg(long)]
        tol: Option<f64>,
        /// Write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum What {
    /// Shortest-path distance matrix D
    Distance,
    /// Special Laplacian built from signed circulant terms
    Laplacian,
    /// Closed-form inverse of D (even sizes only)
    Inverse,
    /// Moore-Penrose pseudoinverse of the Laplacian (even sizes only)
    Pseudoinverse,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum CliError {
    Usage(String),
    Io(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen {
            n,
            what,
            format,
            out,
        } => cmd_gen(n, what, format, out),
        Command::Verify {
            n,
            n_min,
            n_max,
            oracle_cutoff,
            tol,
            out,
        } => cmd_verify(n, n_min, n_max, oracle_cutoff, tol, out),
        Command::Spectrum { n, tol, out } => cmd_spectrum(n, tol, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn require_size(n: usize) -> Result<(), CliError> {
    if n < 4 {
        return Err(usage(format!("n must be at least 4, got {n}")));
    }
    Ok(())
}

fn require_even(n: usize, what: &str) -> Result<(), CliError> {
    if n % 2 != 0 {
        return Err(usage(format!(
            "{what} needs an even number of vertices, got {n}"
        )));
    }
    Ok(())
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(format!("writing stdout: {e}")))
        }
    }
}

fn cmd_gen(
    n: usize,
    what: What,
    format: Format,
    out: Option<PathBuf>,
) -> Result<ExitCode, CliError> {
    require_size(n)?;
    let matrix: Matrix = match what {
        What::Distance => distance_matrix(n).map_err(|e| usage(e.to_string()))?,
        What::Laplacian => {
            require_even(n, "the special Laplacian")?;
            special_laplacian(n).map_err(|e| usage(e.to_string()))?
        }
        What::Inverse => {
            require_even(n, "the closed-form inverse")?;
            closed_form_inverse(n).map_err(|e| usage(e.to_string()))?.total
        }
        What::Pseudoinverse => {
            require_even(n, "the pseudoinverse")?;
            pseudo_inverse_from_distance(n).map_err(|e| usage(e.to_string()))?
        }
    };
    let text = match format {
        Format::Json => matrix_to_json(&matrix),
        Format::Csv => matrix_to_csv(&matrix),
    };
    emit(&text, out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    n: Option<usize>,
    n_min: Option<usize>,
    n_max: Option<usize>,
    oracle_cutoff: usize,
    tol: Option<f64>,
    out: Option<PathBuf>,
) -> Result<ExitCode, CliError> {
    let (lo, hi) = match (n, n_min, n_max) {
        (Some(n), None, None) => (n, n),
        (None, Some(lo), Some(hi)) => (lo, hi),
        (None, None, None) => return Err(usage("pass --n or both --n-min and --n-max")),
        _ => return Err(usage("pass either --n or the --n-min/--n-max pair")),
    };
    require_size(lo)?;
    if hi < lo {
        return Err(usage(format!("--n-max {hi} is below --n-min {lo}")));
    }
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(usage(format!("--tol must be a positive number, got {t}")));
        }
    }

    let report = run_verification(RunConfig::new(lo, hi, oracle_cutoff, tol));
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    emit(&text, out.as_ref())?;

    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "{} of {} checks failed",
            report.summary.failed,
            report.summary.failed + report.summary.passed
        );
        Ok(ExitCode::from(EXIT_CHECK_FAILED))
    }
}

fn cmd_spectrum(n: usize, tol: Option<f64>, out: Option<PathBuf>) -> Result<ExitCode, CliError> {
    require_size(n)?;
    require_even(n, "the spectrum report")?;
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(usage(format!("--tol must be a positive number, got {t}")));
        }
    }
    let report = spectrum_report(n, tol.unwrap_or(DEFAULT_ZERO_TOL)).map_err(|e| {
        // Only diagonalization failures reach here for validated n.
        CliError::Io(format!("computing spectrum for n = {n}: {e}"))
    })?;
    let mut text = serde_json::to_string_pretty(&report).expect("spectrum serializes");
    text.push('\n');
    emit(&text, out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}
