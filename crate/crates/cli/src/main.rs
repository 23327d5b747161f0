use std::process::ExitCode;

use clap::Parser;
use tightbound_cli::args::{Cli, Command};
use tightbound_cli::run;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command);
    let emit = match &cli.command {
        Command::Loalb { opts, .. }
        | Command::Fas { opts, .. }
        | Command::Linalb { opts, .. }
        | Command::Rsat { opts, .. } => opts.emit.as_ref(),
        Command::Moments { emit, .. } | Command::Gen { emit, .. } => emit.as_ref(),
    };
    // `gen` without --out prints the bare instance so it can be piped.
    match (&cli.command, &result.instance) {
        (Command::Gen { out: None, .. }, Some(text)) => print!("{text}"),
        _ => print!("{}", result.render()),
    }
    if let Some(path) = emit {
        let json = serde_json::to_string_pretty(&result).expect("result serializes");
        if let Err(e) = std::fs::write(path, json + "\n") {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(result.exit_code() as u8)
}
