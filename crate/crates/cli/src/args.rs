use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfjump::algebra::TEST_ALGEBRA_GRAMMAR;
#[cfg(feature = "mutations")]
use hopfjump::hopf::Mutation;
use hopfjump::Prime;

#[derive(Debug, Parser)]
#[command(name = "hopfjump", version, about = "Exact checks for a Hopf algebra deforming Z/p^2 to alpha_p x alpha_p, and the cohomology jumps it produces")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "HOPFJUMP_FORMAT", default_value_t = Format::Pretty)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the deformation over F_p[t]_(t) and run the full verification pipeline.
    Verify(VerifyArgs),
    /// Cartier dual of the deformation fibers or a catalog Hopf algebra.
    Dual(DualArgs),
    /// Quotient of the deformation by a Hopf ideal.
    Quotient(QuotientArgs),
    /// Tables of dim H^i(B(G^n)) on both fibers.
    CohomologyTable(TableArgs),
    /// Least n producing a jump of at least e in degree i.
    Jump(JumpArgs),
    /// Free-locus checks for the translation action of alpha_p^n.
    FreeLocus(FreeLocusArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_prime)]
    pub p: Prime,

    /// Allow p = 5.
    #[arg(long)]
    pub slow: bool,

    /// Inject a defect into the structure maps (negative control).
    #[cfg(feature = "mutations")]
    #[arg(long)]
    pub mutate: Option<Mutation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DualObject {
    Deformation,
    #[value(name = "alpha_p")]
    AlphaP,
    Mu,
    #[value(name = "constant_cyclic")]
    ConstantCyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FiberArg {
    Special,
    Generic,
}

#[derive(Debug, Args)]
pub struct DualArgs {
    #[arg(long, value_parser = parse_prime)]
    pub p: Prime,

    #[arg(long, value_enum, default_value_t = DualObject::Deformation)]
    pub object: DualObject,

    /// Order p^k for mu and constant_cyclic (default 2; alpha_p takes 1).
    #[arg(long)]
    pub k: Option<u32>,

    /// Base field: F_p (special) or F_p(t) (generic).
    #[arg(long, value_enum, default_value_t = FiberArg::Generic)]
    pub fiber: FiberArg,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    #[arg(long, value_parser = parse_prime)]
    pub p: Prime,

    /// Comma-separated monomials generating the ideal, e.g. `x` or `y^2,x*y`.
    #[arg(long, default_value = "x")]
    pub by: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFiber {
    Special,
    Generic,
    Both,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Arity range, `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "1..3")]
    pub n: (u64, u64),

    /// Degree range, `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "0..5")]
    pub i: (u64, u64),

    #[arg(long, value_enum, default_value_t = TableFiber::Both)]
    pub fiber: TableFiber,
}

#[derive(Debug, Args)]
pub struct JumpArgs {
    /// Required gap.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub e: u64,

    /// Cohomological degree.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub i: u64,

    /// Dimension of the projective space; defaults to floor(i/2), past which
    /// the sums no longer change.
    #[arg(long = "N", id = "big_n")]
    pub big_n: Option<u64>,
}

#[derive(Debug, Args)]
#[command(after_help = TEST_ALGEBRA_GRAMMAR)]
pub struct FreeLocusArgs {
    #[arg(long, value_parser = parse_prime)]
    pub p: Prime,

    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=4))]
    pub n: u64,

    /// Coefficient algebra B, e.g. `Fp[e]/(e^2)`.
    #[arg(long, default_value = "Fp[e]/(e^2)")]
    pub algebra: String,

    /// Random trials; without this flag every f is tested when that fits
    /// under the size guard.
    #[arg(long)]
    pub trials: Option<u64>,

    #[arg(long, default_value_t = crate::DEFAULT_SEED)]
    pub seed: u64,
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let v: u32 = s.parse().map_err(|_| format!("'{s}' is not a positive integer"))?;
    Prime::new(v).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("'{t}' is not a nonnegative integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}
