use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use schur_opuc::io::ErrorRecord;
use schur_opuc::Error;

mod commands;
mod report;

use commands::{run, Command, Job};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Schur functions, orthogonal polynomials and pseudocontinuability tests on
/// the unit circle.
#[derive(Debug, Parser)]
#[command(name = "schur-opuc", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Input document (JSON, format "schur-opuc/1").
    input: PathBuf,
    /// Grid size, a power of two in [256, 16384]; defaults to the input's
    /// grid or 2048.
    #[arg(long)]
    grid: Option<usize>,
    /// Polynomial truncation N.
    #[arg(long, default_value_t = 48)]
    trunc: usize,
    /// Number of completion functions K; defaults to N.
    #[arg(long)]
    psi: Option<usize>,
    /// Angle tolerance of the intersection verdict.
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn validate(cli: &Cli) -> Result<Job, Error> {
    if let Some(n) = cli.grid.filter(|n| !n.is_power_of_two() || !(256..=16384).contains(n)) {
        return Err(Error::InvalidGrid(n));
    }
    let psi = cli.psi.unwrap_or(cli.trunc);
    if cli.trunc == 0 || cli.trunc > 256 || psi > 256 {
        return Err(Error::Parse(format!(
            "truncations must satisfy 1 <= N <= 256 and K <= 256 (got N = {}, K = {psi})",
            cli.trunc
        )));
    }
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(Error::Parse(format!("tolerance must be positive, got {}", cli.tol)));
    }
    let text = std::fs::read_to_string(&cli.input)
        .map_err(|e| Error::Parse(format!("{}: {e}", cli.input.display())))?;
    Ok(Job {
        command: cli.command,
        input: schur_opuc::io::parse_input(&text)?,
        grid: cli.grid,
        trunc: cli.trunc,
        psi,
        tol: cli.tol,
    })
}

fn emit(cli: &Cli, body: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = validate(&cli)
        .and_then(|job| run(&job))
        .and_then(|rep| emit(&cli, &rep.render(cli.format)));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let record = ErrorRecord::from_error(&e);
            eprintln!("{}", serde_json::to_string(&record).expect("error record serializes"));
            ExitCode::from(e.code() as u8)
        }
    }
}
