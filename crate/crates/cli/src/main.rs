//! `sphere-bounds`: exact sum-rank sphere sizes and bound comparison tables.
//!
//! Tables go to `--out` (or stdout) as CSV; diagnostics go to stderr.
//! Exit codes: 0 success, 1 invalid parameters, 2 invariant violation,
//! 3 size refused as infeasible.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use log::{error, info, warn};
use sphere_bounds::compare::{
    ell_sweep, exact_feasibility, exact_rows, rho_sweep, selfcheck, write_csv, ComparisonRow,
    EllSweep, RhoSweep, SweepOptions,
};
use sphere_bounds::sumrank::{BinomialReading, SumRankParams};
use sphere_bounds::{Error, LOG_SLACK};

const EXIT_INVALID: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "sphere-bounds",
    version,
    about = "Sum-rank sphere sizes and their bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact (1/ℓ) log_q |S_t| for a range of radii.
    Exact(ExactArgs),
    /// Exact values and all bounds over the radius at fixed ℓ.
    CompareRho(CompareRhoArgs),
    /// Exact values and all bounds over the divisors ℓ of n at fixed t.
    CompareEll(CompareEllArgs),
    /// Run the built-in consistency suites.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args, Debug)]
struct Block {
    /// Field size (a prime power).
    #[arg(long)]
    q: u64,
    /// Rows of each block.
    #[arg(long)]
    m: usize,
}

#[derive(Args, Debug)]
struct Radii {
    /// Only this radius.
    #[arg(long, conflicts_with = "t_max")]
    t: Option<usize>,
    /// Largest radius (default μℓ).
    #[arg(long)]
    t_max: Option<usize>,
}

impl Radii {
    fn bounds(&self) -> (usize, Option<usize>) {
        match self.t {
            Some(t) => (t, Some(t)),
            None => (0, self.t_max),
        }
    }
}

#[derive(Args, Debug)]
struct Output {
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BoundFlags {
    /// Probability mass ε kept inside the entropy window.
    #[arg(long, default_value_t = 0.05)]
    epsilon: f64,
    /// Skip the exact column.
    #[arg(long)]
    no_exact: bool,
    /// Use the literal printed binomial C(ℓ, ℓ-1) in the κ closed form
    /// (not a valid bound; for auditing).
    #[arg(long)]
    debug_literal_binomial: bool,
}

impl BoundFlags {
    fn options(&self) -> SweepOptions {
        SweepOptions {
            epsilon: self.epsilon,
            include_exact: !self.no_exact,
            binomial: reading(self.debug_literal_binomial),
        }
    }
}

fn reading(literal: bool) -> BinomialReading {
    if literal {
        BinomialReading::Literal
    } else {
        BinomialReading::WeakCompositions
    }
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[command(flatten)]
    block: Block,
    /// Columns of each block.
    #[arg(long)]
    eta: usize,
    /// Number of blocks.
    #[arg(long)]
    ell: usize,
    #[command(flatten)]
    radii: Radii,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct CompareRhoArgs {
    #[command(flatten)]
    block: Block,
    /// Columns of each block.
    #[arg(long)]
    eta: usize,
    /// Number of blocks.
    #[arg(long)]
    ell: usize,
    #[command(flatten)]
    radii: Radii,
    #[command(flatten)]
    flags: BoundFlags,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct CompareEllArgs {
    #[command(flatten)]
    block: Block,
    /// Total number of columns n = ηℓ.
    #[arg(long)]
    n: usize,
    /// Radius.
    #[arg(long)]
    t: usize,
    #[command(flatten)]
    flags: BoundFlags,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SelfcheckArgs {
    /// Run the sandwich suite with the literal printed binomial.
    #[arg(long)]
    debug_literal_binomial: bool,
}

fn emit(rows: &[ComparisonRow], out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_csv(rows, BufWriter::new(file))?;
            info!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => write_csv(rows, io::stdout().lock())?,
    }
    Ok(())
}

fn warn_if_large(p: &SumRankParams) -> Result<()> {
    let cost = exact_feasibility(p)?;
    if cost.warn() {
        warn!(
            "exact sphere sequence has degree {} with ~{:.0}-bit coefficients; this may take a while",
            cost.degree, cost.coefficient_bits
        );
    }
    Ok(())
}

/// Logs every sandwich violation; returns the number found.
fn audit(rows: &[ComparisonRow]) -> usize {
    let violations: Vec<_> = rows.iter().flat_map(|r| r.violations(LOG_SLACK)).collect();
    for v in &violations {
        error!("invariant violated: {v}");
    }
    violations.len()
}

fn finish(rows: &[ComparisonRow], out: &Option<PathBuf>) -> Result<ExitCode> {
    emit(rows, out)?;
    Ok(if audit(rows) == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Exact(a) => {
            let p = SumRankParams::new(a.block.q, a.block.m, a.eta, a.ell)?;
            warn_if_large(&p)?;
            let (t_min, t_max) = a.radii.bounds();
            emit(&exact_rows(&p, t_min, t_max)?, &a.output.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CompareRho(a) => {
            let options = a.flags.options();
            if options.include_exact {
                warn_if_large(&SumRankParams::new(a.block.q, a.block.m, a.eta, a.ell)?)?;
            }
            let (t_min, t_max) = a.radii.bounds();
            let rows = rho_sweep(&RhoSweep {
                q: a.block.q,
                m: a.block.m,
                eta: a.eta,
                ell: a.ell,
                t_min,
                t_max,
                options,
            })?;
            finish(&rows, &a.output.out)
        }
        Command::CompareEll(a) => {
            let out = ell_sweep(&EllSweep {
                q: a.block.q,
                m: a.block.m,
                n: a.n,
                t: a.t,
                options: a.flags.options(),
            })?;
            for ell in &out.skipped {
                info!("skipping ell={ell}: t={} exceeds mu*ell", a.t);
            }
            finish(&out.rows, &a.output.out)
        }
        Command::Selfcheck(a) => {
            let report = selfcheck(reading(a.debug_literal_binomial));
            print!("{report}");
            io::stdout().flush()?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VIOLATION)
            })
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Infeasible(_)) => EXIT_INFEASIBLE,
        Some(Error::NoConvergence { .. }) => EXIT_VIOLATION,
        _ => EXIT_INVALID,
    }
}

fn broken_pipe(err: &anyhow::Error) -> bool {
    err.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|e| e.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            error!("{e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
