use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coxcess_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("usage error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = coxcess::par::set_threads(t) {
            eprintln!("warning: {e}");
        }
    }
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.stdout.as_bytes());
            ExitCode::from(report.code as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
