//! Command-line front end: reads JSON problem files, runs one check and
//! prints a report. Exit code 0 means the property holds, 1 that it fails
//! (with a witness), 2 that the input is malformed.

pub mod catalog;
pub mod commands;
pub mod error;
pub mod problem;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rota_core::Rational;

use crate::commands::OpKind;
pub use crate::error::CliError;
pub use crate::problem::{Problem, ProblemFile};
pub use crate::report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "rota",
    version,
    about = "Exact checks for O-operators, their cohomology, deformations and r-matrices"
)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the file and the algebra and bimodule axioms.
    Validate { file: PathBuf },
    /// Check an operator identity on all basis pairs.
    CheckOp {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OpKind::OOperator)]
        kind: OpKind,
        /// Weight of a Rota-Baxter operator.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        weight: String,
    },
    /// Cocycles, coboundaries and cohomology in one degree.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Check whether an element is a Nijenhuis element.
    Nijenhuis {
        file: PathBuf,
        /// A name from `task.elements`, or coordinates such as `0,1,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Formal deformations of the operator.
    Deform {
        #[command(subcommand)]
        action: DeformAction,
    },
    /// Associative r-matrices and their bialgebras.
    Rmatrix {
        #[command(subcommand)]
        action: RmatrixAction,
    },
    /// Write a catalog fixture.
    Emit {
        /// One of poly3_R, poly3_D, dual2, abelian2, ut2, proj2_averaging.
        name: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum DeformAction {
    /// Check the deformation equation order by order.
    Check {
        file: PathBuf,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Extend the deformation, solving each obstruction.
    Extend {
        file: PathBuf,
        /// Target order; one more than the input by default.
        #[arg(long)]
        order: Option<usize>,
        /// Seed for the random infinitesimal used when the file has no deformation.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that `deformation` and `deformation_target` are equivalent through an element.
    Equiv {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum RmatrixAction {
    /// Check the associative Yang-Baxter equation.
    Check { file: PathBuf },
    /// The induced coproduct and the bialgebra axioms.
    Coproduct { file: PathBuf },
    /// Check that `morphism` is a weak morphism from `r_matrix` to `r_matrix_target`.
    WeakMorphism { file: PathBuf },
}

/// Loads and dimension-checks a file. Unless `allow_invalid`, the algebra
/// and bimodule axioms must also hold.
fn load(path: &Path, allow_invalid: bool) -> Result<Problem, CliError> {
    let problem = ProblemFile::load(path)?.build()?;
    if !allow_invalid {
        problem.require_valid()?;
    }
    Ok(problem)
}

/// What a command produced: a report, or raw text (for `emit`).
enum Output {
    Report(Report),
    Text(String),
}

fn dispatch(command: Command) -> Result<Output, CliError> {
    let report = match command {
        Command::Validate { file } => commands::validate(&load(&file, true)?),
        Command::CheckOp { file, kind, weight } => {
            let weight: Rational = weight
                .parse()
                .map_err(|_| CliError::Usage(format!("--weight `{weight}` is not a rational")))?;
            commands::check_op(&load(&file, false)?, kind, &weight)?
        }
        Command::Cohomology { file, degree } => commands::cohomology(&load(&file, false)?, degree)?,
        Command::Nijenhuis { file, element } => commands::nijenhuis(&load(&file, false)?, &element)?,
        Command::Deform { action } => match action {
            DeformAction::Check { file, order } => commands::deform_check(&load(&file, false)?, order)?,
            DeformAction::Extend { file, order, seed } => commands::deform_extend(&load(&file, false)?, order, seed)?,
            DeformAction::Equiv { file, element } => commands::deform_equiv(&load(&file, false)?, &element)?,
        },
        Command::Rmatrix { action } => match action {
            RmatrixAction::Check { file } => commands::rmatrix_check(&load(&file, false)?)?,
            RmatrixAction::Coproduct { file } => commands::rmatrix_coproduct(&load(&file, false)?)?,
            RmatrixAction::WeakMorphism { file } => commands::rmatrix_weak_morphism(&load(&file, false)?)?,
        },
        Command::Emit { name, out } => {
            let text = catalog::emit_fixture(&name)?.to_json() + "\n";
            return match out {
                None => Ok(Output::Text(text)),
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                    Ok(Output::Report(
                        Report::new("emit", true).line(format!("wrote {name} to {}", path.display())),
                    ))
                }
            };
        }
    };
    Ok(Output::Report(report))
}

/// Runs one invocation, writing the report to `out` and diagnostics to
/// `err`. Always returns 0, 1 or 2.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let json = cli.json;
    let outcome = catch_unwind(AssertUnwindSafe(|| dispatch(cli.command)));
    match outcome {
        Ok(Ok(Output::Text(text))) => {
            let _ = write!(out, "{text}");
            0
        }
        Ok(Ok(Output::Report(report))) => {
            let text = if json { report.to_json() + "\n" } else { report.to_text() };
            let _ = write!(out, "{text}");
            report.exit_code()
        }
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(_) => {
            let _ = writeln!(err, "error: internal failure");
            2
        }
    }
}

/// [`run_with`] on stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}
