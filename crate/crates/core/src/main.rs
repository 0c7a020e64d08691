use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qcox::cli::{run_file, CliConfig};

fn main() -> ExitCode {
    let config = CliConfig::parse();
    let out = run_file(&config);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.exit_code as u8)
}
