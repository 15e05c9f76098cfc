use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hankel_spectra::cli::{error_json, execute, parse_tolerance, Command, Format, Options};
use hankel_spectra::error::Error;

/// Exact spectral analysis of Hermitian operators from their traces.
///
/// Input is a JSON document: {"poly": [...]} with coefficients in ascending
/// powers, {"matrix": [[[re, im], ...], ...]} or {"moments": [...]}, all as
/// rational strings. `compare` takes {"first": ..., "second": ...}.
#[derive(Parser)]
#[command(name = "hankel-spectra", version)]
struct Args {
    /// analyze, minpoly, factor, gap, bounds, count, rates, classify or compare
    command: Command,
    /// Input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    /// Iteration tolerance as a rational, such as 1/1000000.
    #[arg(long, value_parser = parse_tolerance)]
    tol: Option<malachite_q::Rational>,
    #[arg(long)]
    max_iter: Option<usize>,
    #[arg(long, default_value = "json")]
    format: Format,
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    };
    result.map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let document = match read_input(&args.input) {
        Ok(text) => text,
        Err(err) => {
            eprint!("{}", error_json(&err));
            return ExitCode::from(1);
        }
    };
    let defaults = Options::default();
    let options = Options {
        tol: args.tol.unwrap_or(defaults.tol),
        max_iter: args.max_iter,
        format: args.format,
    };
    let outcome = execute(args.command, &document, options);
    // A closed pipe is not worth a panic.
    let _ = io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
