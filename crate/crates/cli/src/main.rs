//! `kneser`: exact bounds, constructions, certificates, and searches for
//! extremal families in Kneser graphs.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! computation succeeded but the checked property is false.

mod commands;
mod report;

use clap::error::ErrorKind;
use clap::Parser;

use commands::{Cli, Outcome};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };

    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("KNESER_THREADS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
        })
        .unwrap_or(0);
    if threads > 0 {
        // A failed build only means a pool already exists; proceed.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }

    match commands::run(cli) {
        Ok(Outcome::Ok) => {}
        Ok(Outcome::PropertyFailed) => std::process::exit(2),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
