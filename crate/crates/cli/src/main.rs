use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ofn_cli::commands;
use ofn_cli::error::{CliError, CliResult};
use ofn_core::Bases;

/// Arithmetic and analysis of typed ordered fuzzy numbers.
#[derive(Parser)]
#[command(name = "ofn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as `trap(1,-5,-1,-3) + trap(1,5,-1,3)`.
    Eval {
        #[arg(long)]
        expr: String,
    },
    /// Report propriety and pathology of an OFN document.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Repair an improper OFN document.
    Correct {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Write `alpha,up,down` samples as CSV.
    Sample {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        points: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw both sides as an SVG figure.
    Plot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Shortest fuzzy distances from a source node.
    Graph {
        #[arg(long)]
        edges: PathBuf,
        #[arg(long)]
        source: usize,
    },
    /// Check the library against known worked values.
    Demo,
}

fn run(cmd: Command) -> CliResult<String> {
    let bases = Bases::builtin();
    match cmd {
        Command::Eval { expr } => commands::eval(&expr, &bases),
        Command::Classify { input } => commands::classify(&input, &bases),
        Command::Correct { input } => commands::correct(&input, &bases),
        Command::Sample { input, points, out } => commands::sample(&input, points as usize, &out, &bases),
        Command::Plot { input, out } => commands::plot(&input, &out, &bases),
        Command::Graph { edges, source } => commands::graph(&edges, source, &bases),
        Command::Demo => {
            let (table, failed) = commands::demo();
            print!("{table}");
            if failed > 0 {
                Err(CliError::DemoFailed(failed))
            } else {
                Ok(String::new())
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
