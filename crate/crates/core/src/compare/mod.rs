//! Sweep tables placing exact sum-rank sphere sizes between every bound.
//!
//! A row holds, for one `(ℓ, η, t)`, the exact `(1/ℓ) log_q |S_t|` and each
//! bound normalized the same way. Rows come from two sweeps: over the radius
//! at fixed `ℓ` ([`rho_sweep`]) and over the divisors `ℓ | n` at fixed radius
//! and fixed length `n = ηℓ` ([`ell_sweep`]).

mod csv;
mod row;
mod selfcheck;
mod sweep;

pub use csv::{format_float, write_csv, CSV_HEADER};
pub use row::{ComparisonRow, Violation};
pub use selfcheck::{selfcheck, SelfcheckEntry, SelfcheckReport};
pub use sweep::{
    divisors, ell_sweep, exact_feasibility, exact_rows, rho_sweep, EllSweep, EllSweepOutput,
    ExactCost, RhoSweep, SweepConfig, SweepOptions, EXACT_COST_LIMIT, EXACT_WARN_DEGREE,
};
