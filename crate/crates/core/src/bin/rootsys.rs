use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rootsys::cli::{run, Cli, RunConfig, EXIT_INVALID};

fn main() -> ExitCode {
    let cfg = RunConfig::from(Cli::parse());
    let outcome = run(&cfg);
    let mut code = outcome.code;
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                code = EXIT_INVALID;
            }
        }
        None => {
            let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
        }
    }
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(code as u8)
}
