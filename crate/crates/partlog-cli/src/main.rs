mod cli;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use cli::Cli;
use commands::{exit, Failure};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    match commands::run(cli.command) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if writeln!(stdout, "{out}").is_err() {
                return ExitCode::from(exit::SOFTWARE);
            }
            ExitCode::from(code)
        }
        Err(Failure { code, error }) => {
            eprintln!("partlog: {error:#}");
            ExitCode::from(code)
        }
    }
}
