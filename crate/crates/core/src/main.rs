use std::io;
use std::process::ExitCode;

use clap::Parser;
use wynn_pade::cli::{run_to_output, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_to_output(&cli, &mut io::stderr().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
