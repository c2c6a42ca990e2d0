use std::io::Write;
use std::process::ExitCode;

use chebkit::config::Cli;
use chebkit::{run, CliError, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("chebkit: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let config = RunConfig::from_cli(cli)?;
    let outcome = run(&config)?;
    match &config.output_path {
        Some(path) => std::fs::write(path, &outcome.text)?,
        None => std::io::stdout().lock().write_all(outcome.text.as_bytes())?,
    }
    Ok(outcome.exit_code())
}
