use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use facta::OracleConfig;
use facta_cli::{run, Command};

fn main() -> ExitCode {
    let cmd = Command::parse();
    let config = match OracleConfig::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = run(&cmd, &config);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
