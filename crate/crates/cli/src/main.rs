use std::process::ExitCode;

use clap::Parser;

use cotensor_cli::{exit_code, render, render_error, run_command, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = cli.config();
    match run_command(&cli.command, &config) {
        Ok(outcome) => {
            print!("{}", render(&outcome, &config));
            ExitCode::from(outcome.status.exit_code() as u8)
        }
        Err(e) => {
            eprint!("{}", render_error(cli.command.name(), &e, &config));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
