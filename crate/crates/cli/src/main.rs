use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};

use fermion_density_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    if let Err(msg) = config.validate() {
        RunConfig::command()
            .error(clap::error::ErrorKind::ValueValidation, msg)
            .exit();
    }
    match run(&config) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            if let Some(summary) = out.summary {
                eprintln!("{summary}");
            }
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
