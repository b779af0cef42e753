use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use exturan_cli::{run, write_atomic, CliError, ExperimentConfig, Format};

/// Exact generalized Turán numbers at desk scale.
///
/// Commands: count, turan, f-eval, decomp, biex, construct, exsearch,
/// multipartite, classify, analytic-sweep, verify.
/// Example: `exturan exsearch n=6 T=K3 H=K4`.
#[derive(Parser, Debug)]
#[command(name = "exturan", version)]
struct Cli {
    /// Command to run; may instead come from `command = ...` in the config file.
    command: Option<String>,
    /// `key=value` parameters (override the config file).
    args: Vec<String>,
    /// Flat `key = value` config file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[arg(long, value_parser = ["json", "csv"])]
    format: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match go(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("exturan: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn go(cli: Cli) -> Result<bool, CliError> {
    // With only --config, a lone positional is a parameter rather than a command.
    let (command, args) = match cli.command {
        Some(c) if c.contains('=') => {
            let mut args = vec![c];
            args.extend(cli.args);
            (None, args)
        }
        c => (c, cli.args),
    };
    let format = cli.format.map(|f| f.parse::<Format>()).transpose()?;
    let config = ExperimentConfig::assemble(command.as_deref(), &args, cli.config.as_deref(), cli.out, format)?;
    let report = run(&config)?;
    let text = report.render()?;
    match &config.output {
        Some(path) => write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    Ok(report.passed)
}
