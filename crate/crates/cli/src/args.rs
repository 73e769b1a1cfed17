use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "jsop",
    version,
    about = "Jacobi-Sobolev orthonormal polynomials: tables, kernels and verification",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of (n, x, p_n, q_n, q_n')
    Eval(TableArgs),
    /// Table of (n, x, K_n(x,x), L_n(x,x), L_n(x,c), L_n^{(0,1)}(x,c))
    Kernels(TableArgs),
    /// Table of (n, x, n Λ_n(x), π w(x) sqrt(1-x²))
    Christoffel(TableArgs),
    /// Run the asymptotic-estimate suite; exit 0 iff nothing fails
    Verify(VerifyArgs),
    /// Compare monomial coefficients with the extended-precision Gram oracle
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub beta: f64,
    #[arg(long = "mass-m", default_value_t = 0.0)]
    pub mass_m: f64,
    #[arg(long = "mass-n", default_value_t = 0.0)]
    pub mass_n: f64,
    /// mass point, +1 or -1
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// write here instead of standard output
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// cap on worker threads
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct TableArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// single degree
    #[arg(long, conflicts_with = "degrees", required_unless_present = "degrees")]
    pub degree: Option<usize>,
    /// inclusive degree range `lo:hi`
    #[arg(long)]
    pub degrees: Option<String>,
    /// single evaluation point
    #[arg(long, conflicts_with = "grid")]
    pub x: Option<f64>,
    /// `chebyshev:m`, `uniform:m` or `random:m` (default `chebyshev:257`)
    #[arg(long)]
    pub grid: Option<String>,
    /// seed for `random:m` grids
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// comma-separated estimate ids, or `all`
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// dyadic ladder exponents `lo:hi`; the Christoffel ladder gets one more
    #[arg(long)]
    pub ladder: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct OracleArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long = "max-degree")]
    pub max_degree: usize,
    /// pass threshold on the coefficient discrepancy
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl TableArgs {
    pub fn grid(&self) -> &str {
        self.grid.as_deref().unwrap_or("chebyshev:257")
    }
}

/// Parses `lo:hi` with `lo <= hi`.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got `{s}`"))?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("bad lower bound `{lo}`: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("bad upper bound `{hi}`: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}
