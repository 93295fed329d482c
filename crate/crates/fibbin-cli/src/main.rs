mod cli;
mod commands;
mod error;
mod io;
mod plot;

use clap::Parser;

fn main() {
    let parsed = match cli::Cli::try_parse() {
        Ok(parsed) => parsed,
        Err(e) => {
            // help and version go to stdout with status 0; everything else
            // is a usage error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = commands::run(parsed) {
        eprintln!("fibbin: {e}");
        std::process::exit(e.exit_code());
    }
}
