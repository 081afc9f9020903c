use std::process::ExitCode;

use clap::Parser;
use frp::cli::{run, Cli, Status, INPUT_ERROR, VERIFY_MISMATCH};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch(msg)) => {
            eprintln!("verification failed: first mismatch at {msg}");
            ExitCode::from(VERIFY_MISMATCH as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR as u8)
        }
    }
}
