use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "lcalc", version, about = "Exact unramified L-factor and doubling-constant calculator")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for random parameters and random-point checks.
    #[arg(long, global = true, env = "LCALC_SEED", default_value_t = 0)]
    seed: u64,

    /// Use random rational Satake parameters instead of symbols.
    #[arg(long, global = true)]
    numeric: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Rs,
    Std,
    Sym2,
    Wedge2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Sp,
    So,
    Gl,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an L-factor built from Satake parameters.
    Lfactor(LfactorArgs),
    /// Print the unramified zeta closed form.
    Zeta(ZetaArgs),
    /// Print the doubling constant d_τ(s) for Sp or SO.
    Dtau(DtauArgs),
    /// Orbit and partition combinatorics.
    #[command(subcommand)]
    Orbit(OrbitCommand),
    /// Run identity suites and report PASS/FAIL per case.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct LfactorArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Comma-separated monomials, e.g. `x1,x2^-1,3/2`.
    #[arg(long)]
    pub tau: String,
    /// Second parameter set (Rankin–Selberg only).
    #[arg(long)]
    pub tauprime: Option<String>,
    /// Argument `μs + ν` given as `MU,TWO_NU`.
    #[arg(long, value_name = "MU,TWO_NU", allow_hyphen_values = true)]
    pub arg: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZetaCheck {
    Reduction,
}

#[derive(Args, Debug)]
pub struct ZetaArgs {
    #[arg(long, value_enum)]
    pub group: Group,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub pi: Option<String>,
    #[arg(long)]
    pub tau: Option<String>,
    #[arg(long)]
    pub tauprime: Option<String>,
    #[arg(long, value_enum)]
    pub check: Option<ZetaCheck>,
}

#[derive(Args, Debug)]
pub struct DtauArgs {
    #[arg(long, value_enum)]
    pub group: Group,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub tau: Option<String>,
    /// Also compare against the raw Gindikin–Karpelevich product.
    #[arg(long)]
    pub check: bool,
}

#[derive(Subcommand, Debug)]
pub enum OrbitCommand {
    /// Compare two partitions in dominance order.
    Dominance { lambda: String, mu: String },
    /// Upper bound on the semi-Whittaker dimension of a (k,c) representation.
    DimBound {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        lambda: String,
    },
    /// The orbit ((2k−1)^c 1^c).
    DoublingOrbit {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: usize,
    },
    /// Whether a partition is a nilpotent orbit for the group type.
    Validity {
        #[arg(long, value_enum)]
        group: Group,
        partition: String,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_parser = lcalc_core::suite::Suite::NAMES)]
    pub suite: String,
    /// Truncation degree for series identities.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    pub trunc: u32,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_k: Option<usize>,
    /// Random points per identity.
    #[arg(long, default_value_t = 3)]
    pub points: usize,
    /// Include per-case wall time (makes reports non-deterministic).
    #[arg(long)]
    pub timings: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, hide = true)]
    pub inject_failure: bool,
}

pub struct Globals {
    pub format: Format,
    pub seed: u64,
    pub numeric: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = Globals {
        format: cli.format,
        seed: cli.seed,
        numeric: cli.numeric,
    };
    let result = match cli.command {
        Command::Lfactor(a) => commands::lfactor(&g, &a),
        Command::Zeta(a) => commands::zeta(&g, &a),
        Command::Dtau(a) => commands::dtau(&g, &a),
        Command::Orbit(a) => commands::orbit(&g, &a),
        Command::Verify(a) => commands::verify(&g, &a),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
