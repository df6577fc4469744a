//! Command-line front end: class tables, representatives, excess queries,
//! censuses and verification campaigns.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use coxcess::excess::Budget;
use coxcess::par::Exec;
use coxcess::roots::ClassicalType;

mod census;
mod classes;
mod element;
mod table;
mod verify;

pub use census::{CensusDoc, CensusRow};
pub use classes::{ClassRow, ClassesDoc, GroupInfo};
pub use verify::{VerificationOutcome, SUITES};

#[derive(Parser, Debug)]
#[command(name = "coxcess", version, about = "Length extrema and excess of conjugacy classes in finite Coxeter groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for randomized suites; required with `--format json`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_group_order: u64,
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_class_size: u64,
    /// Materialize classes and add brute-force columns.
    #[arg(long, global = true)]
    pub exhaustive: bool,
    /// Allow the E7 campaign (about 2.9 million elements).
    #[arg(long, global = true)]
    pub big: bool,
    /// Print the supporting sets and formulas.
    #[arg(long, global = true)]
    pub explain: bool,
    /// Run every map on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One row per conjugacy class with formula lengths and representatives.
    Classes {
        #[arg(value_enum, ignore_case = true)]
        ty: TypeArg,
        /// Coxeter rank; `A r` is the symmetric group on r+1 letters.
        rank: usize,
        /// Only this class: `neg;pos` (e.g. `2,4;3`) for B/D, parts for A.
        #[arg(long)]
        class: Option<String>,
    },
    /// Build a class representative.
    Rep {
        #[arg(value_enum)]
        kind: RepKind,
        #[arg(value_enum, ignore_case = true)]
        ty: TypeArg,
        rank: usize,
        #[arg(long)]
        class: String,
    },
    /// Excess of one element, with a witness pair.
    Excess {
        #[arg(value_enum, ignore_case = true)]
        ty: TypeArg,
        rank: usize,
        /// Window `[2,-1,3]` or cycles `(-1,+2)`.
        #[arg(allow_hyphen_values = true)]
        element: String,
        /// Length function to use (defaults to the group type).
        #[arg(long, value_enum, ignore_case = true)]
        flavor: Option<TypeArg>,
    },
    /// Run a verification campaign (`all` runs every default-sized one).
    Verify {
        id: String,
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: Option<TypeArg>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Class-by-class census of a whole group.
    Census {
        /// Preset such as `E6`, `H3`, `B4`, `I2(7)`.
        group: Option<String>,
        /// Coxeter matrix file: rank on the first line, then the rows.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    A,
    B,
    D,
}

impl TypeArg {
    pub fn classical(self) -> ClassicalType {
        match self {
            TypeArg::A => ClassicalType::A,
            TypeArg::B => ClassicalType::B,
            TypeArg::D => ClassicalType::D,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepKind {
    /// Minimal length `u_C`.
    Uc,
    /// Minimal length `u_C^t` (the other half of a split class).
    Uct,
    /// Maximal length `w_{λ,ρ}`.
    Wlr,
    /// Maximal length permutation in stair form (type A).
    Kim,
}

/// Errors that end the run with exit code 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Resource(m) => write!(f, "resource error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<coxcess::Error> for CliError {
    fn from(e: coxcess::Error) -> Self {
        match e {
            coxcess::Error::Budget { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Rendered output and exit code (0 pass, 1 verification failure).
#[derive(Debug)]
pub struct Report {
    pub stdout: String,
    pub code: i32,
}

pub struct Ctx {
    pub format: Format,
    pub seed: Option<u64>,
    pub budget: Budget,
    pub exhaustive: bool,
    pub big: bool,
    pub explain: bool,
    pub exec: Exec,
}

impl Ctx {
    pub fn from_cli(cli: &Cli) -> CliResult<Self> {
        if cli.max_group_order == 0 || cli.max_class_size == 0 {
            return Err(CliError::Usage("resource ceilings must be positive".into()));
        }
        Ok(Ctx {
            format: cli.format,
            seed: cli.seed,
            budget: Budget {
                max_group_order: cli.max_group_order,
                max_class_size: cli.max_class_size,
            },
            exhaustive: cli.exhaustive,
            big: cli.big,
            explain: cli.explain,
            exec: if cli.sequential { Exec::Sequential } else { Exec::default() },
        })
    }

    /// Seed for a randomized suite; JSON output insists on an explicit one.
    pub fn seed_for(&self, suite: &str) -> CliResult<u64> {
        match (self.seed, self.format) {
            (Some(s), _) => Ok(s),
            (None, Format::Json) => Err(CliError::Usage(format!("{suite} is randomized: pass --seed with --format json"))),
            (None, _) => Ok(1),
        }
    }
}

/// Number of letters the group acts on: `A r` is `S_{r+1}`.
pub fn degree(ty: TypeArg, rank: usize) -> CliResult<usize> {
    let n = if ty == TypeArg::A { rank + 1 } else { rank };
    let min = match ty {
        TypeArg::A => 2,
        TypeArg::B => 1,
        TypeArg::D => 2,
    };
    if n < min || n > 12 {
        return Err(CliError::Usage(format!("rank {rank} is out of range for type {ty:?}")));
    }
    Ok(n)
}

pub fn run(cli: &Cli) -> CliResult<Report> {
    let ctx = Ctx::from_cli(cli)?;
    match &cli.command {
        Command::Classes { ty, rank, class } => classes::run(&ctx, *ty, *rank, class.as_deref()),
        Command::Rep { kind, ty, rank, class } => element::rep(&ctx, *kind, *ty, *rank, class),
        Command::Excess { ty, rank, element, flavor } => element::excess(&ctx, *ty, *rank, element, *flavor),
        Command::Verify { id, ty, rank, samples } => verify::run(&ctx, id, *ty, *rank, *samples),
        Command::Census { group, matrix } => census::run(&ctx, group.as_deref(), matrix.as_deref()),
    }
}

pub(crate) fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
