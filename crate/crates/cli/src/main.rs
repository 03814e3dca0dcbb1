mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use frobenii::{Error, ErrorClass};

use args::Cli;
use commands::CliError;
use report::{Provenance, Report, SCHEMA_VERSION};

/// Column offset of `literal` in the command line as typed, quotes aside.
fn locate(argv: &[String], literal: &str) -> Option<usize> {
    let mut offset = 0;
    for (i, arg) in argv.iter().enumerate() {
        let shown = if i == 0 { "frh" } else { arg.as_str() };
        if i > 0 {
            if let Some(pos) = shown.find(literal) {
                // `--flag=value` forms put the literal inside the argument
                if shown == literal || shown.ends_with(literal) {
                    return Some(offset + pos);
                }
            }
        }
        offset += shown.len() + 1;
    }
    None
}

fn report_error(e: &CliError) -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    match (&e.error, &e.literal) {
        (Error::Parse(pe), Some(lit)) => match locate(&argv, lit) {
            Some(offset) => {
                let shifted = pe.clone().shifted(offset);
                eprintln!("error: {shifted}");
                let mut line = vec!["frh".to_string()];
                line.extend(argv.iter().skip(1).cloned());
                eprintln!("  {}", line.join(" "));
                eprintln!("  {}^", " ".repeat(shifted.found_column.saturating_sub(1)));
            }
            None => eprintln!("error: {pe}"),
        },
        (other, _) => eprintln!("error: {other}"),
    }
    match e.error.class() {
        ErrorClass::Validation => ExitCode::from(2),
        ErrorClass::Resource => ExitCode::from(3),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match commands::run(&cli) {
        Ok(o) => o,
        Err(e) => return report_error(&e),
    };
    let report = Report {
        schema_version: SCHEMA_VERSION,
        command: outcome.command,
        inputs: outcome.inputs,
        result: outcome.result,
        provenance: Provenance {
            library_version: env!("CARGO_PKG_VERSION").into(),
            seed: cli.seed,
            witt_cache_key: outcome.cache_key,
        },
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    if cli.json {
        println!("{}", report::to_json(&report));
    } else {
        print!("{}", report::to_text(&report));
    }
    if outcome.failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
