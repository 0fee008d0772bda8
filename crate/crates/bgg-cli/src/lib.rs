//! Command-line front end for the exact BGG machinery.
//!
//! One job per invocation: a [`jobs::JobSpec`] fully determines the run,
//! and identical specs produce byte-identical structured output. Exit
//! codes: 0 success, 2 usage error, 3 resource bound exceeded, 4 internal
//! consistency violation (a theorem-backed identity failed, treated as a
//! bug).

pub mod config;
pub mod docs;
pub mod jobs;
pub mod render;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use bgg_core::Error;
use jobs::{JobSpec, OutputFormat};

#[derive(Debug, Parser)]
#[command(
    name = "bggcli",
    version,
    about = "Exact-arithmetic BGG machinery on flag manifolds: root data, Verma resolutions, nilradical cohomology, splittings, and the verification harness"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Plain-text key=value configuration file (flags win over the file,
    /// the file wins over BGG_MAX_* environment variables).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Output format: text, json, or dot (graph commands only).
    #[arg(long, global = true)]
    pub format: Option<String>,

    /// Override the Weyl group enumeration bound.
    #[arg(long, global = true)]
    pub max_weyl: Option<usize>,

    /// Override the module dimension bound.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,

    /// Override the exterior-complex basis bound.
    #[arg(long, global = true)]
    pub max_ce: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Root system data: Cartan matrix, positive roots, rho.
    Roots {
        /// Simple type and rank, e.g. A2, B3, G2.
        type_label: String,
    },
    /// Minimal coset representatives with lengths and covering edges.
    Hasse {
        type_label: String,
        /// Crossed simple roots (1-based, comma separated), "all" or "none".
        #[arg(long, default_value = "all")]
        crossed: String,
    },
    /// The root-height grading induced by a parabolic subset.
    Grading {
        type_label: String,
        #[arg(long, default_value = "all")]
        crossed: String,
    },
    /// Construct an irreducible module and report its character.
    Irrep {
        type_label: String,
        /// Highest weight in fundamental coordinates, e.g. 1,0.
        #[arg(long, value_delimiter = ',')]
        hw: Vec<i64>,
    },
    /// Build the Verma resolution and check its exactness.
    Resolution {
        type_label: String,
        #[arg(long, value_delimiter = ',')]
        hw: Vec<i64>,
        /// Height cutoff for the exactness check.
        #[arg(long)]
        cutoff: Option<i64>,
    },
    /// Brute-force nilradical cohomology against the highest-weight
    /// prediction, degree by degree.
    Kostant {
        type_label: String,
        #[arg(long, default_value = "all")]
        crossed: String,
        #[arg(long, value_delimiter = ',')]
        hw: Vec<i64>,
    },
    /// The operator diagram dual to the resolution (nodes, symbols, orders).
    Bgg {
        type_label: String,
        #[arg(long, value_delimiter = ',')]
        hw: Vec<i64>,
    },
    /// Equivariant-splitting verdict from the rank data.
    Verdict {
        type_label: String,
        #[arg(long, default_value = "all")]
        crossed: String,
    },
    /// Euler characteristic, module dimension, and the index integer.
    Index {
        type_label: String,
        #[arg(long, default_value = "all")]
        crossed: String,
        #[arg(long, value_delimiter = ',')]
        hw: Vec<i64>,
    },
    /// Run a verification suite (kostant, hodge, resolution, characters,
    /// splitting, jacobi-control, or all).
    Verify {
        suite: String,
        /// Case grid: default or quick.
        #[arg(long, default_value = "default")]
        grid: String,
        /// Seed for the randomized splitting suite.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of randomized splitting cases.
        #[arg(long)]
        cases: Option<usize>,
    },
}

/// Map an error to the documented exit code.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::InvalidInput(_) => 2,
        Error::ResourceExceeded { .. } => 3,
        Error::Inconsistency(_) => 4,
    }
}

/// Translate parsed arguments into a [`JobSpec`] and run it.
pub fn execute(cli: Cli) -> Result<String, Error> {
    let bounds = config::resolve_bounds(
        cli.config.as_deref(),
        cli.max_weyl,
        cli.max_dim,
        cli.max_ce,
    )?;
    let format = match cli.format.as_deref() {
        None => OutputFormat::Text,
        Some(f) => OutputFormat::parse(f)?,
    };
    let spec = match cli.command {
        CliCommand::Roots { type_label } => JobSpec::new("roots", type_label, format),
        CliCommand::Hasse { type_label, crossed } => {
            JobSpec::new("hasse", type_label, format).with_crossed(crossed)
        }
        CliCommand::Grading { type_label, crossed } => {
            JobSpec::new("grading", type_label, format).with_crossed(crossed)
        }
        CliCommand::Irrep { type_label, hw } => {
            JobSpec::new("irrep", type_label, format).with_hw(hw)
        }
        CliCommand::Resolution { type_label, hw, cutoff } => {
            let mut s = JobSpec::new("resolution", type_label, format).with_hw(hw);
            s.cutoff = cutoff;
            s
        }
        CliCommand::Kostant { type_label, crossed, hw } => JobSpec::new("kostant", type_label, format)
            .with_crossed(crossed)
            .with_hw(hw),
        CliCommand::Bgg { type_label, hw } => JobSpec::new("bgg", type_label, format).with_hw(hw),
        CliCommand::Verdict { type_label, crossed } => {
            JobSpec::new("verdict", type_label, format).with_crossed(crossed)
        }
        CliCommand::Index { type_label, crossed, hw } => JobSpec::new("index", type_label, format)
            .with_crossed(crossed)
            .with_hw(hw),
        CliCommand::Verify { suite, grid, seed, cases } => {
            let mut s = JobSpec::new("verify", String::new(), format);
            s.suite = Some(suite);
            s.grid = Some(grid);
            s.seed = seed;
            s.cases = cases;
            s
        }
    };
    jobs::run(&spec, &bounds)
}
