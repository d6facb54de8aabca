//! `lcdag`: command-line front end for lcdag-core.
//!
//! Results go to stdout; a one-line JSON run report (version, resolved
//! parameters, seed, wall time, exit status) goes to stderr.

mod args;
mod commands;
mod format;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use lcdag_core::Error;
use serde_json::json;

use args::{Cli, Command};

/// No LCD scaling exists: every candidate was ruled out.
const EXIT_NONEXISTENT: u8 = 3;
/// A search or enumeration budget ran out before an answer.
const EXIT_BUDGET: u8 = 4;
const EXIT_ERROR: u8 = 1;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::NoLcdScaling { .. }) => EXIT_NONEXISTENT,
        Some(Error::SearchInconclusive { .. } | Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        _ => EXIT_ERROR,
    }
}

fn seed_of(command: &Command) -> Option<u64> {
    match command {
        Command::Lcdify { seed, .. } => *seed,
        _ => None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();

    let result = match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(anyhow::Error::from)
            .and_then(|()| commands::run(&cli.command)),
        None => commands::run(&cli.command),
    };

    let exit = match &result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout
                .write_all(outcome.payload.as_bytes())
                .and_then(|()| stdout.flush())
            {
                eprintln!("error: writing output: {e}");
                EXIT_ERROR
            } else {
                outcome.exit
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code(e)
        }
    };

    let report = json!({
        "tool": "lcdag",
        "version": env!("CARGO_PKG_VERSION"),
        "argv": std::env::args().collect::<Vec<_>>(),
        "params": &cli,
        "seed": seed_of(&cli.command),
        "threads": rayon::current_num_threads(),
        "wall_time_s": started.elapsed().as_secs_f64(),
        "exit": exit,
    });
    eprintln!("{report}");
    ExitCode::from(exit)
}
