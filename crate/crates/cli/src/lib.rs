//! Command-line front end: argument parsing, JSON documents and certificates.

pub mod args;
pub mod certificate;
pub mod commands;
pub mod document;
pub mod error;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::Outcome;
pub use error::CliError;

/// Parses `args` (program name first), runs the command and returns the text
/// for stdout and stderr with the exit code.
pub fn run<I, T>(args: I) -> (Outcome, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    (Outcome { stdout: text, code: 0 }, String::new())
                }
                _ => (Outcome { stdout: String::new(), code: 3 }, text),
            };
        }
    };
    match commands::execute(cli) {
        Ok(out) => {
            let err =
                if out.code == 0 { String::new() } else { "verification failed; see failed items above\n".into() };
            (out, err)
        }
        Err(e) => {
            let code = e.exit_code();
            (Outcome { stdout: String::new(), code }, format!("error: {e}\n"))
        }
    }
}
