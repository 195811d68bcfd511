use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "graphzeta", version, about = "Zeta functions of density matrices through their weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Built-in state: plus, bell, bell-reduced, maxmixed2, maxmixed4, w,
    /// w-reduced, ghz, ghz-reduced, isotropic(p), sigma, sigma3, random(d).
    #[arg(long, conflicts_with = "file")]
    pub state: Option<String>,
    /// Density matrix in JSON: {"dim": n, "entries": [[re, im], ...]}.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Validation tolerance for matrices read from --file.
    #[arg(long, default_value_t = graphzeta::tolerance::DEFAULT_TOL)]
    pub tol: f64,
    /// Seed for randomized states.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Output file; stdout when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Verdict {
    /// Assert the input is the reduction of a pure bipartite state, which
    /// makes the separability verdict conclusive.
    #[arg(long)]
    pub pure_bipartite: bool,
    /// Tolerance for the separability decision.
    #[arg(long, default_value_t = graphzeta::tolerance::SEPARABILITY_TOL)]
    pub sep_tol: f64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the weighted graph of a state as DOT.
    Graph {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Series coefficients c_1..c_N as CSV, with a separability verdict.
    Coeffs {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        verdict: Verdict,
        /// Highest coefficient order.
        #[arg(long = "N", visible_alias = "n", short = 'N', default_value_t = 12)]
        order: usize,
    },
    /// Sample the zeta function on a real u-grid. With a p-grid, sweeps the
    /// isotropic family instead of a single state.
    Curve {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        u_min: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        u_max: f64,
        #[arg(long, default_value_t = 101)]
        u_steps: usize,
        #[arg(long, requires = "p_steps")]
        p_min: Option<f64>,
        #[arg(long, requires = "p_steps")]
        p_max: Option<f64>,
        #[arg(long)]
        p_steps: Option<usize>,
    },
    /// Prime table of the state's graph up to a walk length.
    Primes {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Longest prime length, at most 14.
        #[arg(long, default_value_t = graphzeta::tolerance::DEFAULT_PRIME_LEN)]
        lmax: usize,
    },
    /// Bose symmetry acceptance probabilities p_k next to c_k.
    Bose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Largest number of copies.
        #[arg(long = "K", short = 'K', visible_alias = "k", default_value_t = 3)]
        copies: usize,
    },
    /// Poles of the zeta function with multiplicities, and the verdict they give.
    Singularities {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        verdict: Verdict,
    },
    /// Write a state's density matrix as JSON.
    State {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(commands::Status::Done) => ExitCode::SUCCESS,
        Ok(commands::Status::Entangled) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
