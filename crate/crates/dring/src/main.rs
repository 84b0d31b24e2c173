use std::process::ExitCode;

use clap::Parser;
use dring::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("dring: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
