use std::ops::RangeInclusive;

use super::row::ComparisonRow;
use crate::entropy::{lb_entropy_max, ub_entropy_sphere, window_radii};
use crate::error::{invalid, Error, Result};
use crate::metric::{log2_biguint, WeightSpectrum};
use crate::sumrank::{
    exact_sphere_sequence, lb_closed_envelope, lb_closedform, sumrank_spectrum,
    ub_closedform_kappa_with, ub_integral, BinomialReading, IntegralVariant, SumRankParams,
};

/// Above this sphere-sequence degree `μℓ` the exact computation is slow
/// enough to deserve a warning.
pub const EXACT_WARN_DEGREE: usize = 2000;

/// Refuse exact computations whose estimated limb-product count exceeds this.
pub const EXACT_COST_LIMIT: f64 = 5e11;

/// Settings shared by both sweeps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub epsilon: f64,
    pub include_exact: bool,
    pub binomial: BinomialReading,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            epsilon: 0.05,
            include_exact: true,
            binomial: BinomialReading::WeakCompositions,
        }
    }
}

/// All radii `t_min..=t_max` at fixed `(q, m, η, ℓ)`; `t_max` defaults to `μℓ`.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoSweep {
    pub q: u64,
    pub m: usize,
    pub eta: usize,
    pub ell: usize,
    pub t_min: usize,
    pub t_max: Option<usize>,
    pub options: SweepOptions,
}

/// Fixed radius `t` and length `n = ηℓ`, over every divisor `ℓ` of `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EllSweep {
    pub q: u64,
    pub m: usize,
    pub n: usize,
    pub t: usize,
    pub options: SweepOptions,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepConfig {
    Rho(RhoSweep),
    Ell(EllSweep),
}

impl SweepConfig {
    pub fn run(&self) -> Result<Vec<ComparisonRow>> {
        match self {
            SweepConfig::Rho(cfg) => rho_sweep(cfg),
            SweepConfig::Ell(cfg) => ell_sweep(cfg).map(|out| out.rows),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EllSweepOutput {
    pub rows: Vec<ComparisonRow>,
    /// Divisors left out because `t > μℓ`.
    pub skipped: Vec<usize>,
}

/// Size estimate for the exact `ℓ`-th power of the block polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactCost {
    pub degree: usize,
    /// Bits in the largest coefficient, about `ℓ log2 |A|`.
    pub coefficient_bits: f64,
    /// Roughly `degree² · (bits/64)²` limb products for the last squaring.
    pub estimate: f64,
}

impl ExactCost {
    pub fn warn(&self) -> bool {
        self.degree > EXACT_WARN_DEGREE
    }
}

/// Estimates the exact computation and refuses it above [`EXACT_COST_LIMIT`].
pub fn exact_feasibility(p: &SumRankParams) -> Result<ExactCost> {
    let degree = p.max_radius();
    let coefficient_bits = (p.ell() * p.m() * p.eta()) as f64 * (p.q() as f64).log2();
    let limbs = (coefficient_bits / 64.0).max(1.0);
    let estimate = (degree as f64 + 1.0).powi(2) * limbs * limbs;
    let cost = ExactCost {
        degree,
        coefficient_bits,
        estimate,
    };
    if estimate > EXACT_COST_LIMIT {
        return Err(Error::Infeasible(format!(
            "exact sphere sizes need about {estimate:.3e} limb products \
             (degree {degree}, {coefficient_bits:.0}-bit coefficients); limit is {EXACT_COST_LIMIT:.0e}"
        )));
    }
    Ok(cost)
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Precomputed per-configuration data.
struct Context {
    p: SumRankParams,
    block: WeightSpectrum,
    exact: Option<Vec<f64>>,
    envelope: Vec<f64>,
    options: SweepOptions,
}

impl Context {
    fn new(p: SumRankParams, options: SweepOptions) -> Result<Self> {
        if !(options.epsilon > 0.0 && options.epsilon < 1.0) {
            return Err(invalid(format!(
                "epsilon must lie in (0, 1), got {}",
                options.epsilon
            )));
        }
        let block = sumrank_spectrum(p.q(), p.m(), p.eta())?;
        let exact = if options.include_exact {
            exact_feasibility(&p)?;
            Some(normalized_exact_logs(&p)?)
        } else {
            None
        };
        let norm = 1.0 / p.ell() as f64;
        let envelope = lb_closed_envelope(&p)?
            .into_iter()
            .map(|v| v.value() * norm)
            .collect();
        Ok(Self {
            p,
            block,
            exact,
            envelope,
            options,
        })
    }

    fn row(&self, t: usize) -> Result<ComparisonRow> {
        let p = &self.p;
        let ell = p.ell();
        let norm = 1.0 / ell as f64;
        let mut row = ComparisonRow::empty(ell, p.eta(), t);
        row.exact_logq_norm = self.exact.as_ref().map(|e| e[t]);
        if t > 0 && t < p.max_radius() {
            row.ub_entropy = Some(ub_entropy_sphere(&self.block, ell, t)?.value());
            let window = lb_entropy_max(&self.block, ell, t, self.options.epsilon)?;
            row.lb_entropy_max = Some(window.max_lower_log.value());
            row.window_max = self.exact.as_ref().map(|e| {
                window_radii(t, window.delta, p.max_radius())
                    .map(|r| e[r])
                    .fold(f64::NEG_INFINITY, f64::max)
            });
        }
        row.ub_kappa_closed =
            Some(ub_closedform_kappa_with(p, t, self.options.binomial)?.value() * norm);
        row.ub_integral_gamma = Some(ub_integral(p, t, IntegralVariant::Gamma)?.value() * norm);
        row.ub_integral_kappa = Some(ub_integral(p, t, IntegralVariant::Kappa)?.value() * norm);
        row.lb_closed = Some(lb_closedform(p, t)?.value() * norm);
        row.lb_closed_env = Some(self.envelope[t]);
        Ok(row)
    }
}

fn normalized_exact_logs(p: &SumRankParams) -> Result<Vec<f64>> {
    let scale = 1.0 / ((p.q() as f64).log2() * p.ell() as f64);
    Ok(exact_sphere_sequence(p)?
        .coeffs()
        .iter()
        .map(|c| log2_biguint(c) * scale)
        .collect())
}

fn map_rows<F>(ts: Vec<usize>, f: F) -> Result<Vec<ComparisonRow>>
where
    F: Fn(usize) -> Result<ComparisonRow> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        ts.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ts.into_iter().map(f).collect()
    }
}

fn radius_range(
    p: &SumRankParams,
    t_min: usize,
    t_max: Option<usize>,
) -> Result<RangeInclusive<usize>> {
    let max = p.max_radius();
    let t_max = t_max.unwrap_or(max);
    if t_max > max {
        return Err(Error::RadiusOutOfRange { t: t_max, max });
    }
    if t_min > t_max {
        return Err(invalid(format!("empty radius range {t_min}..={t_max}")));
    }
    Ok(t_min..=t_max)
}

/// One row per radius, in increasing `t`.
pub fn rho_sweep(cfg: &RhoSweep) -> Result<Vec<ComparisonRow>> {
    let p = SumRankParams::new(cfg.q, cfg.m, cfg.eta, cfg.ell)?;
    let range = radius_range(&p, cfg.t_min, cfg.t_max)?;
    let ctx = Context::new(p, cfg.options)?;
    map_rows(range.collect(), |t| ctx.row(t))
}

/// One row per admissible divisor `ℓ` of `n`, in increasing `ℓ`.
pub fn ell_sweep(cfg: &EllSweep) -> Result<EllSweepOutput> {
    if cfg.n == 0 {
        return Err(invalid("n must be positive"));
    }
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for ell in divisors(cfg.n) {
        let p = SumRankParams::new(cfg.q, cfg.m, cfg.n / ell, ell)?;
        if cfg.t > p.max_radius() {
            skipped.push(ell);
            continue;
        }
        rows.push(Context::new(p, cfg.options)?.row(cfg.t)?);
    }
    Ok(EllSweepOutput { rows, skipped })
}

/// Rows with only the exact column filled.
pub fn exact_rows(
    p: &SumRankParams,
    t_min: usize,
    t_max: Option<usize>,
) -> Result<Vec<ComparisonRow>> {
    let range = radius_range(p, t_min, t_max)?;
    exact_feasibility(p)?;
    let logs = normalized_exact_logs(p)?;
    Ok(range
        .map(|t| {
            let mut row = ComparisonRow::empty(p.ell(), p.eta(), t);
            row.exact_logq_norm = Some(logs[t]);
            row
        })
        .collect())
}
