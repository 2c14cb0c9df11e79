//! `qes`: exact construction, verification and numerical cross-checking of
//! quasi-exactly-solvable operators.
//!
//! Exit codes: 0 success, 1 validation/usage error, 2 finding-level failure
//! (an invariance violation, a failed relation, or an unmatched level).

mod emit;
mod run;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "qes", version, about = "exact QES operator toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Emit {
    Text,
    Json,
    Csv,
}

/// Case parameters, all exact rational strings (e.g. `1/3`).
#[derive(Args, Clone, Default)]
pub struct CaseArgs {
    /// Case name: polypot | lame | bose-hubbard
    #[arg(long)]
    pub case: String,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub delta: Option<String>,
    #[arg(long)]
    pub k2: Option<String>,
    #[arg(long)]
    pub p2: Option<String>,
    #[arg(long)]
    pub p1: Option<String>,
    #[arg(long)]
    pub kappa0: Option<String>,
    #[arg(long)]
    pub epsilon: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub mtilde: Option<String>,
    /// Shifted-well parameter M (alternative to --mtilde)
    #[arg(long = "M")]
    pub big_m: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List or display operator families.
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
    /// Check that an operator family preserves its declared space.
    Invariance {
        /// Family name (see `catalog list`).
        #[arg(long)]
        op: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        /// Exponent parameter: a rational like `7/3`, or `formal`.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        alpha_idx: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Verify a named algebraic relation exactly.
    Algebra {
        #[arg(long)]
        relation: String,
        #[arg(long, default_value_t = 2)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        m: i64,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Show a model system in physical and algebraic form.
    Hamiltonian {
        #[command(subcommand)]
        what: HamiltonianCmd,
    },
    /// Emit recurrence data: band matrices, coefficient tables, truncation.
    Recurrence {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 8)]
        upto: i64,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Exact algebraic spectrum: truncation polynomial and isolated roots.
    Spectrum {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Cross-check algebraic levels against a finite-difference spectrum.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        levels: Option<usize>,
        /// Relative tolerance (float accepted here only).
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Run a spectrum sweep over one varying parameter (worker pool sized by
    /// QES_WORKERS).
    Sweep {
        #[command(flatten)]
        case: CaseArgs,
        /// `key=v1,v2,v3`
        #[arg(long)]
        vary: String,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show {
        family: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        alpha_idx: Option<i64>,
    },
}

#[derive(Subcommand)]
enum HamiltonianCmd {
    Show {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Catalog { what } => match what {
            CatalogCmd::List => run::catalog_list(),
            CatalogCmd::Show { family, n, m, a, lambda, alpha_idx } => {
                run::catalog_show(&family, n, m, a.as_deref(), lambda.as_deref(), alpha_idx)
            }
        },
        Command::Invariance { op, n, m, a, lambda, alpha_idx, emit } => {
            run::invariance(&op, n, m, a.as_deref(), lambda.as_deref(), alpha_idx, emit)
        }
        Command::Algebra { relation, n, m, lambda, emit } => {
            run::algebra(&relation, n, m, lambda.as_deref(), emit)
        }
        Command::Hamiltonian { what } => match what {
            HamiltonianCmd::Show { case, emit } => run::hamiltonian_show(&case, emit),
        },
        Command::Recurrence { case, upto, emit } => run::recurrence(&case, upto, emit),
        Command::Spectrum { case, emit } => run::spectrum(&case, emit),
        Command::Verify { case, grid, levels, tol, emit } => {
            run::verify(&case, grid, levels, tol, emit)
        }
        Command::Sweep { case, vary, emit } => run::sweep(&case, &vary, emit),
    };
    match outcome {
        Ok(findings_ok) => {
            if findings_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
