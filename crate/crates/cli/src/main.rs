use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use superder_cli::{run, sidecar_path, Cli, CliError};

fn emit(cli: &Cli) -> Result<(), CliError> {
    let output = run(cli)?;
    match &cli.out {
        Some(path) => {
            fs::write(path, &output.main).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            for (name, text) in &output.sidecars {
                let side = sidecar_path(path, name);
                fs::write(&side, text).map_err(|e| CliError::Io(format!("{}: {e}", side.display())))?;
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(output.main.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match emit(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("superder: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
