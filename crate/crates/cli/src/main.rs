use std::process::ExitCode;

use clap::Parser;
use morphlab_cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("morphlab: {e}");
            e.into()
        }
    }
}
