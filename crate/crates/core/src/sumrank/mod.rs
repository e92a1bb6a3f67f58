//! Sum-rank metric: exact rank-distribution counts, the constants `γ_q`,
//! `γ_{q,m,η}` and `κ_{q,m,η}(t)`, the closed-form sphere bounds, the
//! coefficient-wise lower-bound chain, log-concavity checks and a
//! brute-force rank oracle.
//!
//! An element of `F_q^{m×ηℓ}` is a row of `ℓ` blocks in `F_q^{m×η}`; its
//! weight is the sum of the block ranks. All bounds below are returned as
//! `log_q` of a sphere size (not normalized by `ℓ`).

mod bounds;
mod chain;
mod concavity;
mod constants;
mod counts;
mod oracle;
mod params;

pub use bounds::{
    lb_closed_envelope, lb_closedform, lb_from_split, nm_lower_bound, nm_upper_bound,
    ub_closedform_kappa, ub_closedform_kappa_with, ub_integral, BinomialReading, BoundKind,
    FactorSplit, GreedySplit, IntegralVariant,
};
pub use chain::{lb_chain_polynomials, lower_bound_chain, ChainCheck, LowerBoundChain};
pub use concavity::{
    first_log_concavity_violation, log_concavity_check, nm_ratio_closed_form, LogConcavityReport,
};
pub use constants::{
    gamma_q, gamma_q_m_eta, integral_ub_constant, kappa, kappa_base, log_gamma_q_m_eta_inv,
    log_integral_ub_constant, log_kappa, SumRankConstants, DEFAULT_GAMMA_TOL,
};
pub use counts::{
    exact_sphere_sequence, log_q_binomial_real, num_matrices, q_binomial, q_binomial_real,
    sumrank_spectrum,
};
pub use oracle::{brute_force_spectrum, GaloisField, ORACLE_MAX_SPACE};
pub use params::{is_prime_power, prime_power_decomposition, SumRankParams};
