use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qschur::cellular::CellDatum;
use qschur::{Charge, DegreeConvention, FockConfig};

use crate::parse;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "qschur",
    version,
    about = "Canonical bases, graded dimensions and invariant checks for quiver Schur algebras"
)]
pub struct Cli {
    /// Number of nodes of the cyclic quiver.
    #[arg(long, global = true, default_value_t = 3)]
    pub e: usize,
    /// Level; defaults to the number of charges.
    #[arg(long, global = true)]
    pub ell: Option<usize>,
    /// Comma separated charges, one per component.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub charge: Option<String>,
    /// Largest number of boxes.
    #[arg(long, global = true, default_value_t = 3)]
    pub n: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 20240917)]
    pub seed: u64,
    /// Worker threads for the checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Highest polynomial degree of the graded pieces in basis checks.
    #[arg(long, global = true, default_value_t = 4)]
    pub cutoff: u32,
    /// How tableau degrees count boxes below a strip.
    #[arg(long, global = true, value_enum, default_value_t = Convention::Strip)]
    pub convention: Convention,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Canonical basis in terms of the standard basis, all sizes 1..=n.
    Canonical,
    /// Graded dimension of an idempotent corner, from tableaux and from Fock space.
    Dims {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Runs invariant suites; exit code 3 if any check fails.
    Check {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Semistandard tableaux of a shape, optionally of one type, with degrees.
    Tableaux {
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long = "type", allow_hyphen_values = true)]
        ty: Option<String>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    Strip,
    Literal,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Demazure,
    Relations,
    Degrees,
    Basis,
    Fock,
    All,
}

/// Validated settings shared by all commands.
#[derive(Debug, Clone)]
pub struct Config {
    pub e: usize,
    pub charges: Vec<i64>,
    pub n: u32,
    pub seed: u64,
    pub jobs: usize,
    pub cutoff: u32,
    pub convention: DegreeConvention,
}

impl Config {
    pub fn new(e: usize, charges: Vec<i64>, n: u32) -> Self {
        Self { e, charges, n, seed: 20240917, jobs: 1, cutoff: 4, convention: DegreeConvention::Strip }
    }

    pub fn charge(&self) -> Charge {
        Charge::new(self.e, self.charges.clone())
    }

    pub fn fock(&self) -> FockConfig {
        FockConfig::new(self.e, self.charges.clone()).expect("validated configuration").with_convention(self.convention)
    }

    pub fn cell_datum(&self) -> CellDatum {
        let mut cd = CellDatum::new(self.charge());
        cd.convention = self.convention;
        cd
    }
}

impl Cli {
    pub fn config(&self) -> Result<Config, String> {
        if self.e < 2 {
            return Err("--e must be at least 2".into());
        }
        if self.jobs == 0 {
            return Err("--jobs must be positive".into());
        }
        let charges = match (&self.charge, self.ell) {
            (Some(c), ell) => {
                let z = parse::charges(c)?;
                if let Some(l) = ell
                    && l != z.len()
                {
                    return Err(format!("--ell {l} but {} charges given", z.len()));
                }
                z
            }
            (None, Some(0)) => return Err("--ell must be positive".into()),
            (None, Some(l)) => vec![0; l],
            (None, None) => vec![0],
        };
        Ok(Config {
            e: self.e,
            charges,
            n: self.n,
            seed: self.seed,
            jobs: self.jobs,
            cutoff: self.cutoff,
            convention: match self.convention {
                Convention::Strip => DegreeConvention::Strip,
                Convention::Literal => DegreeConvention::Literal,
            },
        })
    }
}
