use std::process::ExitCode;

use clap::Parser;

use iwforms_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("iwforms: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &out.text)
            .map_err(|e| format!("{}: cannot write: {e}", path.display())),
        None => {
            print!("{}", out.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("iwforms: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(out.code as u8)
}
