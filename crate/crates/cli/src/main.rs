mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fraciter::{Error, Precision};
use output::Format;

/// Fractional iterates of maps with oscillatory convergence.
#[derive(Parser, Debug)]
#[command(name = "fraciter", version, about)]
pub struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, default_value_t = 50)]
    pub digits: u32,

    /// Guard digits; results are trusted to digits - guard places.
    #[arg(long, global = true, default_value_t = 10)]
    pub guard: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapName {
    Golden,
    Silver,
    Cosine,
    Logistic,
}

#[derive(Args, Debug, Clone)]
pub struct MapArgs {
    #[arg(long, value_enum)]
    pub map: MapName,

    /// Logistic parameter, 2 < λ < 3 (default 5/2).
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchName {
    Even,
    Odd,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Golden,
    Silver,
    Cosine,
    Logistic,
    Abel,
    Corrigendum,
    Lambda3,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindName {
    U,
    V,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integer iterates x_0..x_n, exact where the field allows.
    Orbit {
        #[command(flatten)]
        map: MapArgs,
        /// Seed: rational, decimal, or a phi/psi expression such as 3/2+1/2*phi.
        #[arg(long)]
        x0: String,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// The fractional iterate x_t.
    Frac {
        #[command(flatten)]
        map: MapArgs,
        /// Seed; with --complex also a+b*i.
        #[arg(long)]
        x0: String,
        /// Rational index such as 3/2.
        #[arg(long)]
        t: String,
        /// Use the complex Koenig iterate instead of the real two-branch one.
        #[arg(long)]
        complex: bool,
    },
    /// Koenig series coefficients γ_2..γ_N.
    Koenig {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value_t = BranchName::Even)]
        branch: BranchName,
    },
    /// Complex Abel functions of 1 + 1/z: values at --z points, or the full
    /// residual and branch-jump checks when no point is given.
    AbelCheck {
        /// Point a+b*i (repeatable).
        #[arg(long)]
        z: Vec<String>,
    },
    /// κ, Δ and the normalization constants of the two-branch Abel function.
    Kappa {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Run a verification suite. Exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteName::All)]
        suite: SuiteName,
    },
    /// The Möbius maps p, q, r, s: identity checks, or one map at a point.
    Corrigendum {
        /// p, q, r, s or q-printed.
        #[arg(long, requires = "x")]
        map: Option<String>,
        #[arg(long, requires = "map")]
        x: Option<String>,
    },
    /// The λ = 3 recurrences u_k, v_k.
    Lambda3 {
        #[arg(long, value_enum)]
        kind: KindName,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
        /// Show exact rationals for the first entries.
        #[arg(long)]
        exact: bool,
        /// Last exactly computed index when --exact is set.
        #[arg(long, default_value_t = fraciter::lambda3::DEFAULT_EXACT_UNTIL)]
        exact_until: usize,
        /// Add a sqrtk_scaled column.
        #[arg(long)]
        scale: bool,
        /// Emit every stride-th row (default: about 1000 rows in total).
        #[arg(long)]
        stride: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("fraciter: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 3 })
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let prec = Precision::new(cli.digits, cli.guard)?;
    let out = commands::dispatch(&cli.command, prec)?;
    let text = out.render(cli.format)?;
    output::write(&text, cli.out.as_deref())
        .map_err(|e| Error::InvalidInput(format!("cannot write output: {e}")))?;
    Ok(out.pass.unwrap_or(true))
}
