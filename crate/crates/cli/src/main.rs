//! `alphametric` command-line entry point. Every run prints one JSON report
//! (or CSV rows with `--csv`) and exits with a documented status code.

use std::io::Write as _;
use std::process::ExitCode;

mod args;
mod report;
mod run;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let out = run::run(&argv);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(out.code)
}
