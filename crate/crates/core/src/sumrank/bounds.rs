use num_bigint::BigUint;
use num_integer::binomial;

use super::constants::{
    gamma_q, log_gamma_q_m_eta_inv, log_integral_ub_constant, log_kappa, DEFAULT_GAMMA_TOL,
};
use super::counts::log_q_binomial_real;
use super::params::SumRankParams;
use crate::error::{Error, Result};
use crate::metric::{upper_concave_envelope, LogValue};

/// Column tag for one evaluated quantity of a comparison row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    ExactLog,
    UbEntropy,
    LbEntropyMax,
    UbKappaClosed,
    UbIntegralGamma,
    UbIntegralKappa,
    LbClosed,
    LbClosedEnvelope,
}

impl BoundKind {
    pub const ALL: [BoundKind; 8] = [
        BoundKind::ExactLog,
        BoundKind::UbEntropy,
        BoundKind::LbEntropyMax,
        BoundKind::UbKappaClosed,
        BoundKind::UbIntegralGamma,
        BoundKind::UbIntegralKappa,
        BoundKind::LbClosed,
        BoundKind::LbClosedEnvelope,
    ];

    pub fn column(self) -> &'static str {
        match self {
            BoundKind::ExactLog => "exact_logq_norm",
            BoundKind::UbEntropy => "ub_entropy",
            BoundKind::LbEntropyMax => "lb_entropy_max",
            BoundKind::UbKappaClosed => "ub_kappa_closed",
            BoundKind::UbIntegralGamma => "ub_integral_gamma",
            BoundKind::UbIntegralKappa => "ub_integral_kappa",
            BoundKind::LbClosed => "lb_closed",
            BoundKind::LbClosedEnvelope => "lb_closed_env",
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(
            self,
            BoundKind::UbEntropy
                | BoundKind::UbKappaClosed
                | BoundKind::UbIntegralGamma
                | BoundKind::UbIntegralKappa
        )
    }

    pub fn is_lower(self) -> bool {
        matches!(
            self,
            BoundKind::LbEntropyMax | BoundKind::LbClosed | BoundKind::LbClosedEnvelope
        )
    }
}

fn log_q_binomial_exact(n: usize, k: usize, q: f64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let c: BigUint = binomial(BigUint::from(n), BigUint::from(k));
    LogValue::of_biguint_or_zero(&c, q).value()
}

fn check_rank(m: usize, eta: usize, i: usize) -> Result<()> {
    let mu = m.min(eta);
    if i > mu {
        Err(Error::RadiusOutOfRange { t: i, max: mu })
    } else {
        Ok(())
    }
}

/// Lower bound on `log_q NM_q(m, η, i)`:
/// `(γ_{q,m,η}^{-1/μ})^i · [μ i]_{1/q²} · q^{i(m+η-i)}`.
pub fn nm_lower_bound(q: u64, m: usize, eta: usize, i: usize) -> Result<LogValue> {
    check_rank(m, eta, i)?;
    let qf = q as f64;
    let mu = m.min(eta);
    let value = log_gamma_q_m_eta_inv(q, m, eta) * i as f64 / mu as f64
        + log_q_binomial_real(mu, i, 1.0 / (qf * qf)) / qf.ln()
        + (i * (m + eta - i)) as f64;
    Ok(LogValue::new(value, qf))
}

/// Upper bound on `log_q NM_q(m, η, t)`: `κ(t) · q^{t(m+η-t)}`.
pub fn nm_upper_bound(q: u64, m: usize, eta: usize, t: usize) -> Result<LogValue> {
    check_rank(m, eta, t)?;
    let value = log_kappa(q, m, eta, t) + (t * (m + eta - t)) as f64;
    Ok(LogValue::new(value, q as f64))
}

/// Which binomial multiplies the `κ` closed-form sphere bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BinomialReading {
    /// `C(t+ℓ-1, ℓ-1)`, the number of ways to spread radius `t` over `ℓ` blocks.
    #[default]
    WeakCompositions,
    /// The printed `C(ℓ+1-1, ℓ-1) = ℓ`; kept for auditing, it is not a valid bound.
    Literal,
}

fn exponent(p: &SumRankParams, t: usize) -> f64 {
    let t = t as f64;
    t * ((p.m() + p.eta()) as f64 - t / p.ell() as f64)
}

/// Upper bound on `log_q |S_t|`: `κ(t) · C(t+ℓ-1, ℓ-1) · q^{t(m+η-t/ℓ)}`.
pub fn ub_closedform_kappa(p: &SumRankParams, t: usize) -> Result<LogValue> {
    ub_closedform_kappa_with(p, t, BinomialReading::WeakCompositions)
}

pub fn ub_closedform_kappa_with(
    p: &SumRankParams,
    t: usize,
    reading: BinomialReading,
) -> Result<LogValue> {
    p.check_radius(t)?;
    let q = p.q() as f64;
    let ell = p.ell();
    let log_binom = match reading {
        BinomialReading::WeakCompositions => log_q_binomial_exact(t + ell - 1, ell - 1, q),
        BinomialReading::Literal => log_q_binomial_exact(ell, ell - 1, q),
    };
    let value = log_kappa(p.q(), p.m(), p.eta(), t) + log_binom + exponent(p, t);
    Ok(LogValue::new(value, q))
}

/// The per-block constant used in the integral upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralVariant {
    /// `C(t) = γ_q`, giving the prefactor `γ_q^ℓ`.
    Gamma,
    /// `C(t) = κ(t)`, giving the prefactor `κ(t)`.
    Kappa,
}

/// Upper bound on `log_q |S_t|` from bounding the `ℓ`-fold convolution by
/// Gaussian integrals.
pub fn ub_integral(p: &SumRankParams, t: usize, variant: IntegralVariant) -> Result<LogValue> {
    p.check_radius(t)?;
    let prefactor = match variant {
        IntegralVariant::Gamma => {
            let g = gamma_q(p.q() as f64, DEFAULT_GAMMA_TOL)?;
            p.ell() as f64 * g.ln() / (p.q() as f64).ln()
        }
        IntegralVariant::Kappa => log_kappa(p.q(), p.m(), p.eta(), t),
    };
    let value = prefactor + log_integral_ub_constant(p.ell(), p.q()) + exponent(p, t);
    Ok(LogValue::new(value, p.q() as f64))
}

/// How radius `t` is distributed over the `μ` linear factors
/// `(1 + q^{m+η-2i+1} z)^ℓ` when lower-bounding `[z^t] F(z)^ℓ`.
///
/// Any split with `j_i ≤ ℓ` and `Σ j_i = t` gives a valid lower bound.
pub trait FactorSplit {
    /// Returns `j_1, ..., j_μ`.
    fn split(&self, p: &SumRankParams, t: usize) -> Vec<usize>;
}

/// Fill the largest factors first: `ℓ` for `i ≤ t_*`, `r` for `i = t_* + 1`,
/// zero after, where `t = t_*·ℓ + r`.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedySplit;

impl FactorSplit for GreedySplit {
    fn split(&self, p: &SumRankParams, t: usize) -> Vec<usize> {
        let ell = p.ell();
        let (full, r) = (t / ell, t % ell);
        (0..p.mu())
            .map(|i| match i.cmp(&full) {
                std::cmp::Ordering::Less => ell,
                std::cmp::Ordering::Equal => r,
                std::cmp::Ordering::Greater => 0,
            })
            .collect()
    }
}

/// Lower bound on `log_q |S_t|` from an arbitrary [`FactorSplit`]:
/// `γ_{q,m,η}^{-t/μ} ∏_i C(ℓ, j_i) q^{j_i (m+η-2i+1)}`.
pub fn lb_from_split<S: FactorSplit + ?Sized>(
    p: &SumRankParams,
    t: usize,
    split: &S,
) -> Result<LogValue> {
    p.check_radius(t)?;
    let parts = split.split(p, t);
    if parts.len() != p.mu()
        || parts.iter().sum::<usize>() != t
        || parts.iter().any(|&j| j > p.ell())
    {
        return Err(Error::InvalidParameter(format!(
            "split {parts:?} is not a distribution of t={t} over {} factors of size <= {}",
            p.mu(),
            p.ell()
        )));
    }
    let q = p.q() as f64;
    let m_eta = (p.m() + p.eta()) as f64;
    let per_factor: f64 = parts
        .iter()
        .enumerate()
        .map(|(idx, &j)| {
            let i = (idx + 1) as f64;
            log_q_binomial_exact(p.ell(), j, q) + j as f64 * (m_eta - 2.0 * i + 1.0)
        })
        .sum();
    let scale = log_gamma_q_m_eta_inv(p.q(), p.m(), p.eta()) * t as f64 / p.mu() as f64;
    Ok(LogValue::new(scale + per_factor, q))
}

/// Closed-form lower bound on `log_q |S_t|`; with `t = t_*·ℓ + r`,
/// `γ_{q,m,η}^{-t/μ} C(ℓ, r) q^{t(m+η-t/ℓ) + r²/ℓ - r}`.
pub fn lb_closedform(p: &SumRankParams, t: usize) -> Result<LogValue> {
    p.check_radius(t)?;
    let q = p.q() as f64;
    let ell = p.ell();
    let r = t % ell;
    let rf = r as f64;
    let value = log_gamma_q_m_eta_inv(p.q(), p.m(), p.eta()) * t as f64 / p.mu() as f64
        + log_q_binomial_exact(ell, r, q)
        + exponent(p, t)
        + rf * rf / ell as f64
        - rf;
    Ok(LogValue::new(value, q))
}

/// Least concave majorant of [`lb_closedform`] over `t = 0..=μℓ`.
pub fn lb_closed_envelope(p: &SumRankParams) -> Result<Vec<LogValue>> {
    let raw = (0..=p.max_radius())
        .map(|t| lb_closedform(p, t).map(|v| v.value()))
        .collect::<Result<Vec<_>>>()?;
    let q = p.q() as f64;
    Ok(upper_concave_envelope(&raw)
        .into_iter()
        .map(|v| LogValue::new(v, q))
        .collect())
}
