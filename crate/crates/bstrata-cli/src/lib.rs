//! Command-line harness around `bstrata-core`: enumeration with dimension
//! histograms, generating-function dumps, the verification suites,
//! single-diagram inspection, and primitive-ratio tables.

use clap::{Parser, Subcommand};

pub mod commands;
pub mod driver;
pub mod error;
pub mod output;
pub mod suites;

pub use error::AppError;

#[derive(Parser, Debug)]
#[command(
    name = "bstrata",
    version,
    about = "Cauchon-diagram enumeration and exact strata generating functions for the type-B minuscule big cell"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate Cauchon diagrams and histogram their stratum dimensions.
    Enumerate(commands::enumerate::EnumerateArgs),
    /// Dump the strata-count polynomials p_n(t).
    Gf(commands::gf::GfArgs),
    /// Run the cross-verification suites.
    Verify(commands::verify::VerifyArgs),
    /// Inspect a single diagram: grid, pipes, cycles, dimension.
    Diagram(commands::diagram::DiagramArgs),
    /// Table of primitive counts and their proportion among all strata.
    PrimitiveRatio(commands::ratio::RatioArgs),
}

pub fn run(cli: Cli) -> Result<(), AppError> {
    match &cli.command {
        Command::Enumerate(args) => commands::enumerate::run(args),
        Command::Gf(args) => commands::gf::run(args),
        Command::Verify(args) => commands::verify::run(args),
        Command::Diagram(args) => commands::diagram::run(args),
        Command::PrimitiveRatio(args) => commands::ratio::run(args),
    }
}
