use std::f64::consts::LN_2;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::metric::{log2_biguint, log_sum_exp, WeightSpectrum};

/// Target accuracy of the solved `ρ(β)`; relative to `ρ` when `ρ < 1`.
pub const RHO_TOL: f64 = 1e-12;

/// The bracket search stops doubling `|β|` beyond this value.
pub const BETA_BRACKET_LIMIT: f64 = 4096.0;

pub const MAX_BISECTION_STEPS: usize = 200;

/// Weight distribution of one letter under `P_β`, in natural logs.
struct Weighted {
    /// `ln(count_w) - β w ln q - ln Z`, per weight.
    log_p: Vec<f64>,
    /// `ln Z`.
    ln_z: f64,
}

fn ln_counts(s: &WeightSpectrum) -> Vec<f64> {
    s.counts().iter().map(|c| log2_biguint(c) * LN_2).collect()
}

fn weighted(s: &WeightSpectrum, beta: f64) -> Weighted {
    let ln_q = s.log_base().ln();
    let terms: Vec<f64> = ln_counts(s)
        .into_iter()
        .enumerate()
        .map(|(w, lc)| {
            if lc == f64::NEG_INFINITY {
                lc
            } else {
                lc - beta * w as f64 * ln_q
            }
        })
        .collect();
    let ln_z = log_sum_exp(&terms);
    Weighted {
        log_p: terms.into_iter().map(|a| a - ln_z).collect(),
        ln_z,
    }
}

impl Weighted {
    fn mean(&self) -> f64 {
        self.log_p
            .iter()
            .enumerate()
            .map(|(w, lp)| w as f64 * lp.exp())
            .sum()
    }

    fn variance(&self, mean: f64) -> f64 {
        self.log_p
            .iter()
            .enumerate()
            .map(|(w, lp)| (w as f64 - mean).powi(2) * lp.exp())
            .sum()
    }
}

/// `log_q Z(β)` where `Z(β) = F(q^{-β}) = Σ_w count_w q^{-βw}`.
pub fn log_partition(s: &WeightSpectrum, beta: f64) -> f64 {
    weighted(s, beta).ln_z / s.log_base().ln()
}

/// Mean weight `ρ(β)` under `P_β`.
pub fn rho_of_beta(s: &WeightSpectrum, beta: f64) -> f64 {
    weighted(s, beta).mean()
}

/// `Var(wt)` under `P_β`, as `Σ_w p_w (w - ρ)²`.
pub fn weight_variance(s: &WeightSpectrum, beta: f64) -> f64 {
    let d = weighted(s, beta);
    d.variance(d.mean())
}

/// A solved Boltzmann distribution for a target mean weight.
#[derive(Debug, Clone, PartialEq)]
pub struct BoltzmannModel {
    pub spectrum: WeightSpectrum,
    pub beta: f64,
    /// `q^{-β}`; may over- or underflow for extreme `β` (the log-domain
    /// quantities stay exact).
    pub x: f64,
    /// `log_q Z(β)`.
    pub log_z: f64,
    /// Achieved mean weight.
    pub rho: f64,
    /// Entropy in base `q`.
    pub entropy: f64,
    pub var_w: f64,
}

impl BoltzmannModel {
    fn at(s: &WeightSpectrum, beta: f64) -> Self {
        let ln_q = s.log_base().ln();
        let d = weighted(s, beta);
        let rho = d.mean();
        let log_z = d.ln_z / ln_q;
        Self {
            spectrum: s.clone(),
            beta,
            x: (-beta * ln_q).exp(),
            log_z,
            rho,
            entropy: log_z + beta * rho,
            var_w: d.variance(rho),
        }
    }
}

/// Find `β` with `ρ(β) = rho` by bisection.
///
/// `rho` must lie in the open interval `(0, μ)`. When `rho` equals the
/// average weight (as an `f64`), `β = 0` is returned without iterating.
pub fn solve_beta(s: &WeightSpectrum, rho: f64) -> Result<BoltzmannModel> {
    let mu = s.mu() as f64;
    if !(rho > 0.0 && rho < mu) {
        return Err(Error::Domain(format!(
            "rho = {rho} must lie in the open interval (0, {mu})"
        )));
    }
    let w_bar = s.average_weight().to_f64().unwrap_or(f64::NAN);
    if rho == w_bar {
        return Ok(BoltzmannModel::at(s, 0.0));
    }
    // ρ is decreasing in β: a smaller target needs a positive β.
    let sign = if rho < w_bar { 1.0 } else { -1.0 };
    let mut near = 0.0;
    let mut far = sign;
    while (rho_of_beta(s, far) - rho) * sign > 0.0 {
        near = far;
        far *= 2.0;
        if far.abs() > BETA_BRACKET_LIMIT {
            return Err(Error::Domain(format!(
                "rho = {rho} is within solver tolerance of the boundary of (0, {mu})"
            )));
        }
    }
    let tol = RHO_TOL * rho.min(1.0);
    for _ in 0..MAX_BISECTION_STEPS {
        let mid = 0.5 * (near + far);
        let r = rho_of_beta(s, mid);
        if (r - rho).abs() <= tol {
            return Ok(BoltzmannModel::at(s, mid));
        }
        if mid == near || mid == far {
            break;
        }
        if (r - rho) * sign > 0.0 {
            near = mid;
        } else {
            far = mid;
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_BISECTION_STEPS,
        rho,
    })
}

/// `H = log_q Z + βρ`.
pub fn entropy(model: &BoltzmannModel) -> f64 {
    model.log_z + model.beta * model.rho
}

/// `log_q(F(y) / y^ρ)` for `y > 0`; at least `H_ρ`, with equality at the
/// solved `y = q^{-β}`.
pub fn saddle_point_direct(s: &WeightSpectrum, rho: f64, y: f64) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::Domain(format!("saddle point needs y > 0, got {y}")));
    }
    let ln_y = y.ln();
    let terms: Vec<f64> = ln_counts(s)
        .into_iter()
        .enumerate()
        .map(|(w, lc)| lc + w as f64 * ln_y)
        .collect();
    Ok((log_sum_exp(&terms) - rho * ln_y) / s.log_base().ln())
}

/// `h_q(ρ) = ρ log_q(q-1) - ρ log_q ρ - (1-ρ) log_q(1-ρ)` for `ρ ∈ [0, 1]`.
pub fn q_ary_entropy(q: u64, rho: f64) -> f64 {
    let xlogx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
    let qf = q as f64;
    (rho * (qf - 1.0).ln() - xlogx(rho) - xlogx(1.0 - rho)) / qf.ln()
}
