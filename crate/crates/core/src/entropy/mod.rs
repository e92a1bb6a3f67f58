//! Boltzmann-distribution bounds for any coordinate-additive alphabet.
//!
//! For `β ∈ ℝ` the Boltzmann distribution puts mass proportional to
//! `q^{-β·wt(a)}` on each letter `a`. Its mean weight `ρ(β)` is strictly
//! decreasing in `β`, so every `ρ ∈ (0, μ)` has a unique `β`. The entropy
//! `H_ρ` of that distribution upper-bounds the normalized sphere size at
//! radius `ℓρ`; Chebyshev's inequality around the mean gives lower bounds on
//! sums and maxima of spheres in a window around `ℓρ`.
//!
//! Every probability-weighted sum is computed with log-sum-exp, so extreme
//! `β` never overflows.

mod boltzmann;
mod bounds;

pub use boltzmann::{
    entropy, log_partition, q_ary_entropy, rho_of_beta, saddle_point_direct, solve_beta,
    weight_variance, BoltzmannModel, BETA_BRACKET_LIMIT, MAX_BISECTION_STEPS, RHO_TOL,
};
pub use bounds::{
    delta_of_epsilon, lb_entropy_max, lb_entropy_window_sum, ub_entropy_ball, ub_entropy_sphere,
    window_radii, WindowBound,
};
