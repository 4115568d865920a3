use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use homotopy_calc::cli::{run, Args};

fn main() -> ExitCode {
    let out = run(&Args::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
