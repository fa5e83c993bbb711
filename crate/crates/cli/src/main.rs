mod args;
mod commands;
mod csv;
mod input;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Failure of a command, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or invalid input, exit code 2.
    Input(String),
    /// Computation failure, exit code 1.
    Compute(String),
}

impl From<nevanlinna::Error> for CliError {
    fn from(e: nevanlinna::Error) -> Self {
        use nevanlinna::Error::*;
        match e {
            NonFinite(_)
            | IdenticallyZeroDenominator
            | ConstantPolynomial
            | ConstantFunction
            | FunctionIdenticallyA
            | LinearCoefficientNonzero { .. }
            | DegreeTooSmall { .. }
            | BinomialShape
            | TooFewTargets(_)
            | DuplicateTargets
            | InvalidGrid(_)
            | InvalidConfig(_)
            | Parse(_) => CliError::Input(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Profile(a) => commands::profile(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::FtaWitness(a) => commands::fta_witness(&a),
        Command::Localize(a) => commands::localize(&a),
        Command::Corpus(a) => commands::corpus(&a),
    };
    match result {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
