use std::process::ExitCode;

use clap::Parser;
use pauliwalk_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match pauliwalk_cli::execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("walk: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
