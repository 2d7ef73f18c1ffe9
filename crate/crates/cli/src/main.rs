use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use hup_lab::report::render_error;
use hup_lab::{emit_grid, run_scenario, LabError, Report, Scenario, EXIT_CHECK_FAIL, EXIT_PASS, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(name = "hup-lab", version, about = "Run Heisenberg uniqueness pair scenarios")]
struct Cli {
    /// Override the primary threshold of the scenario.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Print nothing; only the exit status reports the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a scenario and print its report.
    Run { scenario: PathBuf },
    /// Write the transform grid of an ft_grid scenario as CSV.
    Grid {
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn load(cli: &Cli, path: &Path) -> anyhow::Result<Scenario> {
    let mut scenario = Scenario::load(path)?;
    if let Some(t) = cli.tolerance {
        if !(t.is_finite() && t > 0.0) {
            return Err(LabError::Usage(format!("--tolerance must be positive, got {t}")).into());
        }
        scenario.set_tolerance(t);
    }
    Ok(scenario)
}

fn execute(cli: &Cli, echo: &mut Option<String>) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Run { scenario } => {
            let scenario = load(cli, scenario)?;
            *echo = Some(scenario.echo());
            Ok(run_scenario(&scenario)?)
        }
        Command::Grid { scenario, out } => {
            let scenario = load(cli, scenario)?;
            *echo = Some(scenario.echo());
            Ok(emit_grid(&scenario, out)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut echo = None;
    let outcome = execute(&cli, &mut echo);
    if !cli.quiet {
        eprintln!("elapsed: {:.3} s", started.elapsed().as_secs_f64());
    }
    match outcome {
        Ok(report) => {
            if !cli.quiet {
                print!("{}", report.render());
            }
            ExitCode::from(if report.passed() { EXIT_PASS } else { EXIT_CHECK_FAIL })
        }
        Err(err) => {
            let code = err.downcast_ref::<LabError>().map_or(EXIT_USAGE, LabError::exit_code);
            if !cli.quiet {
                print!("{}", render_error(echo.as_deref(), &format!("{err:#}")));
            }
            ExitCode::from(code)
        }
    }
}
