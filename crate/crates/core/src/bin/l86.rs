use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nambu_swe::cli;

#[derive(Parser)]
#[command(about = "Five-component fast-slow model runs")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate the configured trajectory and write it as CSV.
    Run { config: PathBuf },
}

fn main() -> ExitCode {
    let code = match Args::parse().command {
        Command::Run { config } => match cli::load_l86_config(&config) {
            Ok(c) => cli::run_l86(&c),
            Err(code) => code,
        },
    };
    ExitCode::from(code as u8)
}
