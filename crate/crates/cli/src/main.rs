//! `arr`: exact invariants of central hyperplane arrangements.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 validation error,
//! 3 inconclusive freeness under --strict, 4 strong-monodromy violation
//! (an implementation-bug signal; the containment is a theorem).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "arr",
    version,
    about = "Exact combinatorial invariants of central complex hyperplane arrangements",
    after_help = "Input files are plain (\"n r\" header, then \"a_1 .. a_n : m_1 .. m_r\" per \
hyperplane) or JSON ({\"dim\", \"factors\", \"hyperplanes\": [{\"normal\", \"mults\"}]}); \
the format is sniffed from the content."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,

    /// Exit 3 when freeness is Inconclusive
    #[arg(long, global = true)]
    strict: bool,

    /// Emit Bernstein-Sato outputs whose hypothesis is freeness even when no
    /// certificate was found (results are labeled)
    #[arg(long, global = true)]
    assume_free: bool,

    /// Degree bound for the Saito certificate search (default: number of
    /// hyperplanes)
    #[arg(long, global = true, value_name = "K")]
    max_degree: Option<u32>,

    /// Specialize the zeta function to one variable (s_j -> s)
    #[arg(long, global = true)]
    single_variable: bool,

    /// Shift range a..b (inclusive) for characteristic-cycle components
    #[arg(
        long,
        global = true,
        value_name = "A..B",
        default_value = "0..0",
        allow_hyphen_values = true
    )]
    shifts: String,

    /// Include wall-clock timings in the report (off by default so report
    /// output is byte-identical across runs)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Edges of the intersection lattice with rank, J-set, Mobius value,
    /// density flag, and characteristic polynomial
    Lattice { file: PathBuf },
    /// Dense edges only
    Dense { file: PathBuf },
    /// Characteristic polynomial of the arrangement
    Charpoly { file: PathBuf },
    /// Freeness decision: Saito certificate, Terao obstruction, or
    /// Inconclusive
    Freeness { file: PathBuf },
    /// Predicted b-function root set (exact for certified-free arrangements)
    BsRoots { file: PathBuf },
    /// Maisonobe's generator of the Bernstein-Sato ideal (free, complete
    /// factorization)
    BsIdeal { file: PathBuf },
    /// Lower-bound components of the Bernstein-Sato zero locus (complete
    /// factorization)
    BsLower { file: PathBuf },
    /// Relative characteristic-cycle components with multiplicities
    Cc { file: PathBuf },
    /// Topological zeta function with exact pole locus
    Zeta { file: PathBuf },
    /// Check the pole locus against the Bernstein-Sato lower bound
    VerifySmc { file: PathBuf },
    /// Full pipeline: lattice, dense edges, freeness, Bernstein-Sato
    /// outputs, zeta, strong-monodromy check
    Report { file: PathBuf },
    /// List the built-in corpus; optionally write the files to a directory
    Corpus {
        /// Write <name>.json and <name>.txt files into this directory
        #[arg(long, value_name = "DIR")]
        write: Option<PathBuf>,
    },
}

/// Error wrapper deciding the process exit code.
pub enum CliError {
    /// I/O problems: exit 1.
    Io(String),
    /// Input or precondition violations: exit 2.
    Validation(String),
}

impl From<arr_core::ArrError> for CliError {
    fn from(e: arr_core::ArrError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Validation(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Validation(m) => m,
        }
    }
}

pub fn read_arrangement(path: &PathBuf) -> Result<arr_core::Arrangement, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(arr_core::Arrangement::parse(&text)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own help/version requests are success; everything else
            // is a usage error (exit 1)
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

impl Cli {
    fn parse_shifts(&self) -> Result<std::ops::RangeInclusive<i64>, CliError> {
        let (a, b) = self.shifts.split_once("..").ok_or_else(|| {
            CliError::Validation(format!("bad --shifts {:?}, expected A..B", self.shifts))
        })?;
        let lo: i64 = a
            .trim()
            .parse()
            .map_err(|_| CliError::Validation(format!("bad shift bound {a:?}")))?;
        let hi: i64 = b
            .trim()
            .parse()
            .map_err(|_| CliError::Validation(format!("bad shift bound {b:?}")))?;
        if lo > hi {
            return Err(CliError::Validation(format!("empty shift range {lo}..{hi}")));
        }
        Ok(lo..=hi)
    }
}
