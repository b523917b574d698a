use std::io;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use taperswarm::cli::{self, Cli, CliError};

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Config(cli::first_line(&e.to_string()));
            eprintln!("{}", err.report_line());
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let code = cli::execute(parsed, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
