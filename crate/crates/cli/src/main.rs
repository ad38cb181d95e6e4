use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod exit;
mod output;
mod scenario;

use commands::RunOptions;
use scenario::Overrides;

/// Integrable flows on SL(2,C) semidirect towers: RK4 simulation, exact
/// factorization solutions and property verification.
///
/// Exit codes: 0 success, 1 config error, 2 numerical failure, 3 verification failure.
#[derive(Parser)]
#[command(name = "aks", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate the collective flow with RK4 and write the trajectory and invariant report.
    Simulate(RunArgs),
    /// Solve the flow by factorizing Exp(tΘ) and write the trajectory with factor curves.
    SolveAks {
        #[command(flatten)]
        run: RunArgs,
        /// Use the explicit cosh/sinh factors instead of numerical factorization.
        #[arg(long)]
        closed_form: bool,
    },
    /// Run the property suites and print each residual.
    Verify {
        /// algebra, groups, brackets, dynamics, aks or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check a structure-constant descriptor JSON file.
        #[arg(long)]
        descriptor: Option<PathBuf>,
    },
    /// Print the SU(2)·B factors of a unimodular 2×2 matrix, given row-major
    /// as 4 real or 8 interleaved re/im entries.
    Factorize {
        #[arg(required = true, num_args = 4..=8, allow_negative_numbers = true)]
        entries: Vec<f64>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// Directory for the output files.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Trajectory CSV to compare against; prints the largest state deviation.
    #[arg(long)]
    compare: Option<PathBuf>,
    /// Fail with exit code 3 when an invariant drifts past its threshold.
    #[arg(long)]
    strict: bool,
    /// Seed for `random_sl2c` initial data.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl RunArgs {
    fn options(&self) -> RunOptions<'_> {
        RunOptions {
            scenario: &self.scenario,
            out: &self.out,
            overrides: Overrides { dt: self.dt, t_end: self.t_end, samples: self.samples, seed: self.seed },
            compare_with: self.compare.as_deref(),
            strict: self.strict,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let result = match &cli.command {
        Command::Simulate(run) => commands::simulate(&run.options()),
        Command::SolveAks { run, closed_form } => commands::solve_aks(&run.options(), *closed_form),
        Command::Verify { suite, seed, descriptor } => commands::verify(suite, *seed, descriptor.as_ref()),
        Command::Factorize { entries } => commands::factorize(entries),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}
