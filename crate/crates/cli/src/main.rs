use std::io::Write;
use std::process::ExitCode;

use binconv::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (stdout, failure) = match run(&cli) {
        Ok(o) => (o.stdout, o.failure),
        Err(e) => (String::new(), Some(e)),
    };
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(stdout.as_bytes());
    let _ = out.flush();
    match failure {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
