use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nambu_swe::cli;

#[derive(Parser)]
#[command(about = "Energy- and enstrophy-exact rotating shallow-water runs")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate the configured experiment and write diagnostics and snapshots.
    Run { config: PathBuf },
    /// Check the discrete conservation identities on random inputs.
    Verify,
}

fn main() -> ExitCode {
    let code = match Args::parse().command {
        Command::Run { config } => match (cli::load_swe_config(&config), cli::threads_from_env()) {
            (Ok(c), Ok(threads)) => cli::run_swe(&c, threads),
            (Err(code), _) => code,
            (_, Err(msg)) => {
                eprintln!("error: {msg}");
                2
            }
        },
        Command::Verify => cli::run_verify(),
    };
    ExitCode::from(code as u8)
}
