use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polyperm::oracle::HARD_LIMIT;
use polyperm::OperationKind;
use polyperm_cli::{cmd_enumerate, cmd_op, cmd_verify, CliError, OutputFormat};

#[derive(Parser)]
#[command(
    name = "polyperm",
    version,
    about = "Enumerate polynomial permutation classes given by peg permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the class described by a peg-set file
    Enumerate {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Enumerate permutations sortable by at most k moves
    Op {
        #[arg(long, value_parser = parse_op)]
        op: OperationKind,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Check the counts against breadth-first search
    Verify {
        #[arg(long, value_parser = parse_op)]
        op: OperationKind,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = HARD_LIMIT)]
        limit: usize,
    },
}

fn parse_op(s: &str) -> Result<OperationKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = OperationKind::ALL.iter().map(|op| op.name()).collect();
        format!(
            "unknown operation {s:?}, expected one of {}",
            names.join(", ")
        )
    })
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Enumerate {
            input,
            n_max,
            format,
        } => {
            print!("{}", cmd_enumerate(&input, n_max)?.render(format));
            Ok(true)
        }
        Command::Op {
            op,
            k,
            n_max,
            format,
        } => {
            print!("{}", cmd_op(op, k, n_max)?.render(format));
            Ok(true)
        }
        Command::Verify {
            op,
            k,
            n_max,
            limit,
        } => {
            let report = cmd_verify(op, k, n_max, limit)?;
            print!("{}", report.render());
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("polyperm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
