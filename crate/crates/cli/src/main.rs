use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qfp::app::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((outcome, emit)) => {
            let out = outcome.render(emit);
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("qfp: {e}");
            ExitCode::FAILURE
        }
    }
}
