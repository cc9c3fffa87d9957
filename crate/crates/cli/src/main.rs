mod args;
mod commands;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use output::{write_csv, RunConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Library(#[from] fixpoint::Error),
    #[error("gate failure: {0}")]
    Gate(String),
    #[error("cross-check disagreement: {0}")]
    Disagreement(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("output: {0}")]
    Json(#[from] serde_json::Error),
    #[error("output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) | CliError::Library(_) => 2,
            CliError::Gate(_) => 3,
            CliError::Disagreement(_) => 4,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}

fn configure_threads(threads: Option<usize>) -> Result<usize, CliError> {
    let wanted = threads.unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(wanted)
        .build_global()
        .map_err(|e| CliError::Validation(format!("thread pool: {e}")))?;
    Ok(rayon::current_num_threads())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let threads = configure_threads(cli.threads)?;
    let base = |command: &str| RunConfig {
        command: command.into(),
        seed: cli.seed,
        threads,
        precision: cli.precision.label().into(),
        format: format!("{:?}", cli.format).to_lowercase(),
        ..RunConfig::default()
    };
    let stdout = std::io::stdout();
    let (report, failure) = match cli.command {
        Command::Mult { ref lambda, r, alg } => commands::mult(base("mult"), lambda, r, alg)?,
        Command::Moments { model, n, ref x, i, k, c, r_max } => {
            commands::moments(base("moments"), model, n, x.clone(), i, k, c, r_max, cli.precision)?
        }
        Command::Simulate { model, n, ref x, i, k, c, samples, r_max } => {
            commands::simulate(base("simulate"), model, n, x.clone(), i, k, c, samples, r_max, cli.seed)?
        }
        Command::Ratio { ref lambda, i, t, ref n_list } => {
            commands::ratio(base("ratio"), lambda.clone(), i, t, n_list.clone())?
        }
        Command::Dist { model, n, ref x, i, k, r_max } => commands::dist(base("dist"), model, n, x.clone(), i, k, r_max)?,
        Command::Verify { suite } => {
            let mut cfg = base("verify");
            cfg.suite = Some(format!("{suite:?}").to_lowercase());
            let results = verify::run(suite);
            let mut out = stdout.lock();
            match cli.format {
                Format::Json => {
                    for r in &results {
                        serde_json::to_writer(&mut out, &r.json())?;
                        writeln!(out)?;
                    }
                    let passed = results.iter().all(|r| r.passed);
                    let summary = serde_json::json!({
                        "schema_version": output::SCHEMA_VERSION,
                        "command": "verify",
                        "config": cfg,
                        "passed": passed,
                        "gates": results.len(),
                    });
                    serde_json::to_writer(&mut out, &summary)?;
                    writeln!(out)?;
                }
                Format::Csv => write_csv(&verify::table(&results), &mut out)?,
            }
            let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.gate).collect();
            if failed.is_empty() {
                return Ok(());
            }
            return Err(CliError::Gate(failed.join(", ")));
        }
    };
    report.write(cli.format, stdout.lock())?;
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
