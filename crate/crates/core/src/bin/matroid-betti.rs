use std::io::Write;
use std::process::ExitCode;

use matroid_betti::cli;

fn main() -> ExitCode {
    let out = cli::run_args(std::env::args_os(), &mut std::io::stdin());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
