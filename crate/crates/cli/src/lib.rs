//! The `d2kit` command line: argument definitions, the corpus layout with
//! `.expect` golden files, and one function per subcommand.
//!
//! Exit codes: 0 on success (including inconclusive results), 1 on input,
//! parse or model errors, 2 on expectation mismatches in check mode.

pub mod args;
pub mod corpus;
mod commands;
mod report;
#[cfg(test)]
mod tests;

use std::io::Write;

use clap::Parser;

pub use args::{Cli, Command, Format, GlobalOpts};
pub use corpus::CorpusEntry;
pub use report::{report_rows, ReportRow};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, or a failed operation.
    Input(String),
    /// Computed values disagree with the `.expect` file.
    Mismatch(Vec<String>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Mismatch(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "error: {m}"),
            CliError::Mismatch(ms) => {
                write!(f, "expectation mismatch:")?;
                for m in ms {
                    write!(f, "\n  {m}")?;
                }
                Ok(())
            }
        }
    }
}

pub(crate) fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

/// Runs a parsed command line; diagnostics go to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match commands::dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                1
            } else {
                let _ = write!(out, "{}", e.render());
                0
            }
        }
    }
}
