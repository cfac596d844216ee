//! `dj`: command-line front end for the report module.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use deutsch_jozsa::report::{self, OutputFormat, Rendered};

#[derive(Parser)]
#[command(
    name = "dj",
    version,
    about = "Single-qubit Deutsch-Jozsa: oracles, derivation and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the four oracle matrices.
    Matrices {
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Solve the real orthogonality system; optionally cross-check on a grid.
    Derive {
        #[arg(long, allow_negative_numbers = true)]
        grid_step: Option<f64>,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Run the single-query protocol against all four oracles.
    Verify {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Enumerate one-query classical strategies and show the two-query witness.
    Classical {
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Show that identifying the exact function in one query is infeasible.
    Impossible {
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: deutsch_jozsa::Result<Rendered> = match cli.command {
        Command::Matrices { format } => Ok(report::matrices(format)),
        Command::Derive { grid_step, format } => report::derive(grid_step, format),
        Command::Verify { theta, format } => report::verify(theta, format),
        Command::Classical { format } => Ok(report::classical(format)),
        Command::Impossible {
            samples,
            seed,
            format,
        } => report::impossible(samples, seed, format),
    };
    match result {
        Ok(rendered) => {
            print!("{}", rendered.body);
            if rendered.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
