use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Default relative tolerance for the truncated `γ_q` product.
pub const DEFAULT_GAMMA_TOL: f64 = 1e-12;

/// `γ_q = 1 / ∏_{i≥1} (1 - q^{-i})`.
///
/// The product is truncated at the first `N` with `q^{-N}/(q-1) < rel_tol`;
/// the omitted tail `∏_{i>N}(1 - q^{-i})` is at least `1 - q^{-N}/(q-1)`,
/// so the result undershoots the true value by less than `rel_tol`
/// relatively.
pub fn gamma_q(q: f64, rel_tol: f64) -> Result<f64> {
    if !(q > 1.0) || !q.is_finite() {
        return Err(Error::Domain(format!("gamma_q needs q > 1, got {q}")));
    }
    if !(rel_tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {rel_tol}"
        )));
    }
    let mut log_prod = 0.0;
    let mut q_pow_neg = 1.0;
    loop {
        q_pow_neg /= q;
        log_prod += (-q_pow_neg).ln_1p();
        if q_pow_neg / (q - 1.0) < rel_tol {
            break;
        }
    }
    Ok((-log_prod).exp())
}

/// `log_q γ_{q,m,η}^{-1} = Σ_{j=𝔐-μ+1}^{𝔐} log_q(1 - q^{-j})`, a non-positive number.
pub fn log_gamma_q_m_eta_inv(q: u64, m: usize, eta: usize) -> f64 {
    let (mu, big_m) = (m.min(eta), m.max(eta));
    let qf = q as f64;
    let ln: f64 = (big_m - mu + 1..=big_m)
        .map(|j| (-qf.powi(-(j as i32))).ln_1p())
        .sum();
    ln / qf.ln()
}

/// `γ_{q,m,η} = 1 / ∏_{j=𝔐-μ+1}^{𝔐} (1 - q^{-j})`, which lies in `[1, γ_q]`.
pub fn gamma_q_m_eta(q: u64, m: usize, eta: usize) -> f64 {
    (q as f64).powf(-log_gamma_q_m_eta_inv(q, m, eta))
}

/// `(1 - q^{-m})(1 - q^{-η}) / (1 - q^{-1})`, so that `κ(t) = kappa_base^t`.
pub fn kappa_base(q: u64, m: usize, eta: usize) -> f64 {
    q_pow(q, log_kappa(q, m, eta, 1))
}

/// `log_q κ_{q,m,η}(t)`.
pub fn log_kappa(q: u64, m: usize, eta: usize, t: usize) -> f64 {
    let qf = q as f64;
    let per_unit = ((-qf.powi(-(m as i32))).ln_1p() + (-qf.powi(-(eta as i32))).ln_1p()
        - (-1.0 / qf).ln_1p())
        / qf.ln();
    per_unit * t as f64
}

/// `κ_{q,m,η}(t)`.
pub fn kappa(q: u64, m: usize, eta: usize, t: usize) -> f64 {
    q_pow(q, log_kappa(q, m, eta, t))
}

/// `log_q ∏_{k=1}^{ℓ-1} (1 + sqrt(kπ / ((k+1) ln q)))`.
pub fn log_integral_ub_constant(ell: usize, q: u64) -> f64 {
    let ln_q = (q as f64).ln();
    let ln: f64 = (1..ell)
        .map(|k| {
            let k = k as f64;
            (k * PI / ((k + 1.0) * ln_q)).sqrt().ln_1p()
        })
        .sum();
    ln / ln_q
}

/// `∏_{k=1}^{ℓ-1} (1 + sqrt(kπ / ((k+1) ln q)))`; equal to 1 for `ℓ ≤ 1`.
pub fn integral_ub_constant(ell: usize, q: u64) -> f64 {
    q_pow(q, log_integral_ub_constant(ell, q))
}

fn q_pow(q: u64, x: f64) -> f64 {
    (x * (q as f64).ln()).exp()
}

/// The three constants attached to one `(q, m, η)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumRankConstants {
    pub gamma_q: f64,
    pub gamma_qmn: f64,
    pub kappa_base: f64,
}

impl SumRankConstants {
    pub fn new(q: u64, m: usize, eta: usize) -> Result<Self> {
        Ok(Self {
            gamma_q: gamma_q(q as f64, DEFAULT_GAMMA_TOL)?,
            gamma_qmn: gamma_q_m_eta(q, m, eta),
            kappa_base: kappa_base(q, m, eta),
        })
    }
}
