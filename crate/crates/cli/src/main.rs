use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = lsbmark_cli::Cli::parse();
    match lsbmark_cli::run(cli) {
        Ok(report) => {
            println!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
