//! The `pbinet` command line: argument parsing, dispatch and payload
//! rendering, kept separate from `main` so it can be driven in-process.
//!
//! Exit codes: `0` success, `1` domain error (parse failure, degenerate or
//! singular system, failed verification), `2` usage error. Standard output
//! carries only the payload; diagnostics go to standard error.

pub mod args;
mod commands;
pub mod render;

use std::ffi::OsString;
use std::fmt::Display;

use clap::Parser;

use args::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn domain(err: impl Display) -> Self {
        CliError::Domain(err.to_string())
    }
}

/// Everything one invocation produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(code: i32, message: &str) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    dispatch(cli.command)
}

fn dispatch(command: Command) -> Outcome {
    let (result, format) = match command {
        Command::Eval { expr, output } => (commands::eval(&expr).map(ok), output.format),
        Command::Roots {
            coeffs,
            method,
            output,
        } => (
            commands::roots(&coeffs.coeffs, method.method).map(ok),
            output.format,
        ),
        Command::Solve {
            rec,
            method,
            output,
        } => (
            commands::solve(&rec.coeffs, &rec.seeds, method.method).map(ok),
            output.format,
        ),
        Command::Term {
            rec,
            k,
            method,
            output,
        } => (
            commands::term(&rec.coeffs, &rec.seeds, k, method.method).map(ok),
            output.format,
        ),
        Command::Seq { rec, count, output } => (
            commands::seq(&rec.coeffs, &rec.seeds, count).map(ok),
            output.format,
        ),
        Command::Verify {
            rec,
            kmax,
            tol,
            output,
        } => (
            commands::verify_cmd(&rec.coeffs, &rec.seeds, kmax, tol),
            output.format,
        ),
        Command::Table { group, output } => (Ok(ok(commands::table(group))), output.format),
        Command::Sigma { coeffs, output } => {
            (commands::sigma(&coeffs.coeffs).map(ok), output.format)
        }
    };
    match result {
        Ok((report, true)) => Outcome {
            code: EXIT_OK,
            stdout: report.render(format),
            stderr: String::new(),
        },
        Ok((report, false)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: report.render(format),
            stderr: "error: at least one evaluation path exceeded the tolerance\n".to_string(),
        },
        Err(CliError::Usage(message)) => Outcome::failure(EXIT_USAGE, &message),
        Err(CliError::Domain(message)) => Outcome::failure(EXIT_DOMAIN, &message),
    }
}

fn ok(report: render::Report) -> (render::Report, bool) {
    (report, true)
}
