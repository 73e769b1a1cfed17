mod args;
mod commands;
mod grid;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] jsop_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use jsop_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(E::Domain(_) | E::Contract { .. } | E::UnknownEstimate(_)) => 2,
            CliError::Core(_) | CliError::Io(_) => 3,
        }
    }
}

fn threads(cmd: &Command) -> Option<usize> {
    match cmd {
        Command::Eval(a) | Command::Kernels(a) | Command::Christoffel(a) => a.out.threads,
        Command::Verify(a) => a.out.threads,
        Command::Oracle(a) => a.out.threads,
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    if let Some(k) = threads(&cli.command) {
        if k == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Eval(a) => commands::eval(a),
        Command::Kernels(a) => commands::kernels(a),
        Command::Christoffel(a) => commands::christoffel(a),
        Command::Verify(a) => commands::verify(a),
        Command::Oracle(a) => commands::oracle(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            match &e {
                CliError::Core(inner) => eprintln!("error in {}: {e}", inner.operation()),
                _ => eprintln!("error: {e}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
