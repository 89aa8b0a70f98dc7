use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use torsion_packet::commands::{self, DecagonCommand, LshapeCommand};
use torsion_packet::report::Format;

/// Exact checks for periodic points on genus-two Veech surfaces.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutFormat,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
    Text,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
            OutFormat::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Ratios tan(πβ)/tan(πα) of a given algebraic degree.
    TangentRatios {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, default_value_t = 12)]
        max_denominator: u64,
        /// Drop units and normalize the remaining rows.
        #[arg(long)]
        non_units_only: bool,
    },
    /// Recompute the quadratic non-unit ratios and compare with a reference list.
    VerifyTable1 {
        /// Reference report (defaults to the bundled table).
        #[arg(long)]
        ground_truth: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        max_denominator: u64,
    },
    /// Admissible L-shaped parameters (b, e, λ).
    Lshape {
        #[arg(value_enum)]
        action: LshapeAction,
        #[arg(long, default_value_t = 10_000)]
        b_max: u64,
    },
    /// Limit differential, torsion solutions and handoff for the double-zero stratum.
    Stratum2 {
        #[arg(long, default_value_t = 5)]
        torsion_order: u64,
    },
    /// The decagon configuration.
    Decagon {
        #[arg(value_enum)]
        action: DecagonAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LshapeAction {
    Enumerate,
    UnitCase,
    Exclude,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecagonAction {
    Verify,
    ExcludeR,
    Differential,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::TangentRatios { degree, max_denominator, non_units_only } => {
            commands::tangent_ratios(degree, max_denominator, non_units_only)
        }
        Command::VerifyTable1 { ground_truth, max_denominator } => {
            commands::verify_table1(ground_truth.as_deref(), max_denominator)
        }
        Command::Lshape { action, b_max } => commands::lshape(
            match action {
                LshapeAction::Enumerate => LshapeCommand::Enumerate,
                LshapeAction::UnitCase => LshapeCommand::UnitCase,
                LshapeAction::Exclude => LshapeCommand::Exclude,
            },
            b_max,
        ),
        Command::Stratum2 { torsion_order } => commands::stratum2(torsion_order),
        Command::Decagon { action } => commands::decagon(match action {
            DecagonAction::Verify => DecagonCommand::Verify,
            DecagonAction::ExcludeR => DecagonCommand::ExcludeR,
            DecagonAction::Differential => DecagonCommand::Differential,
        }),
    };
    let result = report.and_then(|r| r.emit(cli.format.into(), cli.output.as_deref()).map(|_| r.verdict));
    match result {
        Ok(v) => ExitCode::from(v.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
