//! `gradeforge`: enumerate magma and category gradings and filters from the
//! command line.
//!
//! Exit codes: 0 success, 1 validation failure, 2 budget exhausted, 3 parse
//! or usage error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gradeforge_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "gradeforge",
    version,
    about = "Elementary gradings and filters on magma and category algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit JSON
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Emit plain text (default)
    #[arg(long, global = true)]
    pub table: bool,
    /// Search node budget per enumeration
    #[arg(long, global = true, env = "GRADEFORGE_BUDGET", value_name = "N")]
    pub budget: Option<u64>,
    /// Prime used by the span oracle
    #[arg(long, global = true, default_value_t = 2, value_name = "P")]
    pub field: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Isomorphism classes of magmas of order n
    Census { order: usize },
    /// Homomorphisms G → H
    Hom {
        g: PathBuf,
        h: PathBuf,
        /// Zero magma homomorphisms
        #[arg(long)]
        zero: bool,
    },
    /// Submagmas of G, or of G × H when H is given
    Submagmas {
        g: PathBuf,
        h: Option<PathBuf>,
        /// Zero submagmas of G × H
        #[arg(long, requires = "h")]
        zero: bool,
    },
    /// Functors Γ → Λ
    Functors {
        source: PathBuf,
        target: PathBuf,
        /// Prefunctors instead of functors
        #[arg(long)]
        prefunctors: bool,
    },
    /// Elementary gradings of K[G] by H, or of K[Γ] by Λ
    Gradings {
        source: PathBuf,
        target: PathBuf,
        /// Zero-magma variant: V_0 = {0} and W_0 = V_0
        #[arg(long)]
        zero: bool,
        /// For categories, functors only (prefunctors otherwise)
        #[arg(long)]
        functors: bool,
        /// Keep only nonzero families
        #[arg(long)]
        nonzero_only: bool,
    },
    /// Elementary filters of K[G] by H, or of K[Γ] by Λ
    Filters {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        zero: bool,
        #[arg(long)]
        nonzero_only: bool,
    },
    /// Check a family against the filter and grading axioms
    Verify {
        algebra: PathBuf,
        target: PathBuf,
        family: PathBuf,
        #[arg(long)]
        zero: bool,
    },
    /// Check M(F(f)) = f and F(M(W)) = W over all submagmas of G × H
    Roundtrip { g: PathBuf, h: PathBuf },
    /// Closed-form counts next to brute force
    Count {
        #[command(subcommand)]
        formula: Formula,
    },
}

#[derive(Subcommand, Debug)]
pub enum Formula {
    /// q^(n-1) gradings of M_n(K) by a group of order q with zero
    Matrix { n: usize, q: usize },
    /// (p q^(m-1))^(n^m) as printed
    GroupoidPrinted { m: usize, n: usize, p: usize, q: usize },
    /// Functors between two connected groupoids
    Groupoid { source: PathBuf, target: PathBuf },
    /// Surjections from m to n elements
    Surjections { m: usize, n: usize },
    /// Homomorphisms between abelian groups given by prime-power factors, e.g. 2,4
    Abelian { g: String, h: String },
    /// Nonzero subspaces of Z_p^n
    Subspaces { p: u64, n: u32 },
    /// Functors between groupoids via their components
    Disconnected { source: PathBuf, target: PathBuf },
}

pub enum Failure {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Invalid(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Core(Error::SizeOverflow { .. }) => 2,
        Failure::Core(Error::Parse { .. }) | Failure::Io(..) | Failure::Usage(_) => 3,
        Failure::Core(_) | Failure::Invalid(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(f) => {
            match &f {
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(p, e) => eprintln!("error: {}: {e}", p.display()),
                Failure::Invalid(m) | Failure::Usage(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(exit_code(&f))
        }
    }
}
