use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lrfusion::cases::Regime;
use lrfusion::fusion::{DEFAULT_DIM_CAP, Q};

mod commands;
mod table;

/// Tensor products, Dyck-path polytopes and fusion products for sl_n.
#[derive(Parser, Debug)]
#[command(name = "lrfusion", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest dim V(λ) realized explicitly by `fusion`.
    #[arg(long, global = true, env = "LRFUSION_DIM_CAP", default_value_t = DEFAULT_DIM_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// `--n` plus two weights.
#[derive(Args, Debug)]
pub struct PairArgs {
    /// Rank parameter: the algebra is sl_n.
    #[arg(long)]
    pub n: usize,
    /// First weight, comma-separated ω-coordinates.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        required = true
    )]
    pub l: Vec<i64>,
    /// Second weight, comma-separated ω-coordinates.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        required = true
    )]
    pub m: Vec<i64>,
}

/// `--n` plus one weight.
#[derive(Args, Debug)]
pub struct WeightArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated ω-coordinates.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        required = true
    )]
    pub l: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose V(l) ⊗ V(m).
    Lr(PairArgs),
    /// List Dyck paths and their inequalities.
    Dyck {
        #[arg(long)]
        n: usize,
        /// Drop inequalities implied by others.
        #[arg(long)]
        pruned: bool,
    },
    /// Lattice points of the polytope for a pair, or for explicit bounds.
    Points {
        #[arg(long)]
        n: usize,
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            requires = "m",
            conflicts_with = "bounds"
        )]
        l: Option<Vec<i64>>,
        #[arg(
            long,
            value_delimiter = ',',
            allow_negative_numbers = true,
            requires = "l"
        )]
        m: Option<Vec<i64>>,
        /// One bound per positive root, in the order a11, a12, .., a22, ...
        #[arg(long, value_delimiter = ',', required_unless_present = "l")]
        bounds: Option<Vec<u64>>,
    },
    /// Lattice points whose weight makes l + wt dominant.
    HwCandidates(PairArgs),
    /// Compare a closed formula with the Littlewood-Richardson oracle.
    Case {
        /// sl2, rectangular, pieri-row, pieri-column or large.
        #[arg(value_parser = |s: &str| s.parse::<Regime>())]
        regime: Regime,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Graded decomposition of the fusion product.
    Fusion {
        #[command(flatten)]
        pair: PairArgs,
        /// Evaluation point of the first factor (integer or p/q).
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
        c1: Q,
        /// Evaluation point of the second factor.
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_rational)]
        c2: Q,
    },
    /// The poset of weight pairs summing to l, with Schur positivity.
    Poset(WeightArgs),
    /// Predicted character of the local Weyl module at l.
    Weyl(WeightArgs),
    /// Run the acceptance criteria.
    Verify {
        /// Skip ranks above this.
        #[arg(long)]
        n_max: Option<usize>,
        /// Clip coordinate ranges to this.
        #[arg(long)]
        coord_max: Option<i64>,
        /// Run only these criteria (1-10).
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=10))]
        only: Vec<u8>,
    },
}

fn parse_rational(s: &str) -> Result<Q, String> {
    s.parse::<Q>()
        .map_err(|e| format!("not a rational number: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Lr(pair) => commands::lr(&pair, cli.format),
        Command::Dyck { n, pruned } => commands::dyck(n, pruned, cli.format),
        Command::Points { n, l, m, bounds } => commands::points(n, l, m, bounds, cli.format),
        Command::HwCandidates(pair) => commands::hw_candidates(&pair, cli.format),
        Command::Case { regime, pair } => commands::case(regime, &pair, cli.format),
        Command::Fusion { pair, c1, c2 } => commands::fusion(&pair, &c1, &c2, cli.cap, cli.format),
        Command::Poset(args) => commands::poset(&args, cli.format),
        Command::Weyl(args) => commands::weyl(&args, cli.format),
        Command::Verify {
            n_max,
            coord_max,
            only,
        } => commands::verify(n_max, coord_max, &only, cli.format),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            commands::exit_code(&e)
        }
    }
}
