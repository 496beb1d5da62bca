use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use siam_cli::commands;
use siam_core::scenario::{SweepParam, DEFAULT_FD_STEP};

#[derive(Debug, Parser)]
#[command(name = "siam", version, about = "Technology/institution gap simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every scenario and write the comparison report, traces and plot.
    Run { config: PathBuf },
    /// Vary one parameter of the baseline scenario and tabulate the burden.
    Sweep {
        config: PathBuf,
        /// L, D, T_d or alpha
        #[arg(long)]
        param: SweepParam,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural, numeric and finite-change sensitivity of the baseline scenario.
    Sensitivity {
        config: PathBuf,
        /// Central-difference step in years.
        #[arg(long, default_value_t = DEFAULT_FD_STEP, allow_negative_numbers = true)]
        h: f64,
        /// Lever cut in years for the finite-change comparison.
        #[arg(long, default_value_t = 1.0)]
        delta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the scenario panels as SVG.
    Plot {
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run { config } => commands::cmd_run(config),
        Command::Sweep {
            config,
            param,
            from,
            to,
            steps,
            out,
        } => commands::cmd_sweep(config, *param, *from, *to, *steps, out.as_deref()),
        Command::Sensitivity {
            config,
            h,
            delta,
            out,
        } => commands::cmd_sensitivity(config, *h, *delta, out.as_deref()),
        Command::Plot { config, out } => commands::cmd_plot(config, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("siam: {err}");
            err.into()
        }
    }
}
