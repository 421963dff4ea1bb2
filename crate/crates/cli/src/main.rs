use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gorenstein_kit::{run, Cli, Context};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match Context::from_env() {
        Ok(ctx) => run(&cli, &ctx),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
