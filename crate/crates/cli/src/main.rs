use std::io::Write;
use std::process::ExitCode;

use acis_cli::{run, JobConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cfg = JobConfig::parse();
    let out = run(&cfg);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
