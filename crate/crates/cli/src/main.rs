use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use qlogic_cli::commands::{cmd_admissible, cmd_epr_demo, cmd_eval, cmd_lattice, LatticeTarget};
use qlogic_core::logic::Mode;

#[derive(Parser)]
#[command(
    name = "qlogic",
    version,
    about = "Exact quantum-logic truth valuation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Pasted,
    Unpasted,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Pasted => Mode::Pasted,
            ModeArg::Unpasted => Mode::Unpasted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the propositions of a scenario file at its state.
    Eval {
        scenario: PathBuf,
        /// Overrides the `mode` key of the file.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Export the Hasse diagram of one block or of the pasted collection.
    #[command(group(ArgGroup::new("target").required(true).args(["context", "pasted"])))]
    Lattice {
        scenario: PathBuf,
        #[arg(long)]
        context: Option<String>,
        #[arg(long)]
        pasted: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Check a 0/1 assignment against the contexts of a scenario.
    Admissible {
        scenario: PathBuf,
        assignment: PathBuf,
        /// Check only this context instead of the whole collection.
        #[arg(long)]
        context: Option<String>,
    },
    /// Run the built-in two-particle spin derivation.
    EprDemo {
        #[arg(long, value_enum, default_value = "unpasted")]
        mode: ModeArg,
        /// Measured axis first, e.g. `z,x`, `z,y` or `z,q=(3/5,4/5)`.
        #[arg(long, default_value = "z,x")]
        axes: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval { scenario, mode } => cmd_eval(&scenario, mode.map(Mode::from)),
        Command::Lattice {
            scenario,
            context,
            pasted: _,
            format: Format::Dot,
        } => {
            let target = match context {
                Some(c) => LatticeTarget::Context(c),
                None => LatticeTarget::Pasted,
            };
            cmd_lattice(&scenario, &target)
        }
        Command::Admissible {
            scenario,
            assignment,
            context,
        } => cmd_admissible(&scenario, &assignment, context.as_deref()),
        Command::EprDemo { mode, axes } => cmd_epr_demo(mode.into(), &axes),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("qlogic: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
