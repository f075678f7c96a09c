use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kslogic::cli::{run_color, run_lattice, run_validate, run_valuate, ColorMode, Semantics};
use kslogic::report::OutputFormat;

/// Exact truth-value semantics for quantum projector sets.
#[derive(Parser)]
#[command(name = "kslogic", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Operator-set file.
    #[arg(long)]
    set: String,

    /// Report rendering.
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,

    /// Write the report to a file instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Bivalent,
    Born,
    Super,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Decide,
    Enumerate,
}

#[derive(Subcommand)]
enum Command {
    /// Check that each context resolves the identity, and report which
    /// pairs of operators commute.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Compute the truth values a prepared state induces on the set.
    Valuate {
        #[command(flatten)]
        common: Common,

        /// State spec: a product state like `z+x+`, or `vec:1,0,0,0`.
        #[arg(long)]
        state: String,

        /// Valuation semantics.
        #[arg(long, value_enum, default_value_t = SemanticsArg::Bivalent)]
        semantics: SemanticsArg,
    },
    /// Search for noncontextual bivalent assignments.
    Color {
        #[command(flatten)]
        common: Common,

        /// Stop at the first witness, or count all solutions.
        #[arg(long, value_enum, default_value_t = ModeArg::Decide)]
        mode: ModeArg,

        /// Cap the enumeration at this many solutions.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Evaluate lattice operations over the set's projectors.
    Lattice {
        #[command(flatten)]
        common: Common,

        /// Semicolon-separated operations, e.g.
        /// "meet P_z++ P_z+-;join @Cz;leq P_z++ P_x++;complement P_z+-".
        #[arg(long)]
        ops: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Validate { common } => (common, run_validate(&common.set)),
        Command::Valuate { common, state, semantics } => {
            let semantics = match semantics {
                SemanticsArg::Bivalent => Semantics::Bivalent,
                SemanticsArg::Born => Semantics::Born,
                SemanticsArg::Super => Semantics::Super,
            };
            (common, run_valuate(&common.set, state, semantics))
        }
        Command::Color { common, mode, limit } => {
            let mode = match mode {
                ModeArg::Decide => ColorMode::Decide,
                ModeArg::Enumerate => ColorMode::Enumerate,
            };
            (common, run_color(&common.set, mode, *limit))
        }
        Command::Lattice { common, ops } => (common, run_lattice(&common.set, ops)),
    };

    let report = match result {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };

    let format = match common.format {
        FormatArg::Human => OutputFormat::Human,
        FormatArg::Machine => OutputFormat::Machine,
    };
    let rendered = report.render(format);
    match &common.output {
        Some(path) => {
            if let Err(err) = fs::write(path, rendered) {
                eprintln!("error: cannot write `{path}`: {err}");
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(u8::try_from(report.exit_code).unwrap_or(2))
}
