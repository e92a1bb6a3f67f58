//! Browser bindings for the sphere-bound explorer in `www/`.
//!
//! Each exported function returns a JSON string; the `*_json` versions are
//! plain Rust and carry the logic.

use serde::Serialize;
use sphere_bounds::compare::{
    ell_sweep, rho_sweep, ComparisonRow, EllSweep, RhoSweep, SweepOptions,
};
use sphere_bounds::entropy::solve_beta;
use sphere_bounds::sumrank::{sumrank_spectrum, SumRankParams};
use wasm_bindgen::prelude::*;

/// Largest `μℓ` the page will compute exactly.
pub const MAX_DEGREE: usize = 1500;

#[derive(Serialize)]
struct Row {
    ell: usize,
    eta: usize,
    t: usize,
    rho: f64,
    exact: Option<f64>,
    ub_entropy: Option<f64>,
    lb_entropy_max: Option<f64>,
    ub_kappa_closed: Option<f64>,
    ub_integral_gamma: Option<f64>,
    ub_integral_kappa: Option<f64>,
    lb_closed: Option<f64>,
    lb_closed_env: Option<f64>,
    violations: usize,
}

impl From<&ComparisonRow> for Row {
    fn from(r: &ComparisonRow) -> Self {
        Self {
            ell: r.ell,
            eta: r.eta,
            t: r.t,
            rho: r.rho,
            exact: r.exact_logq_norm,
            ub_entropy: r.ub_entropy,
            lb_entropy_max: r.lb_entropy_max,
            ub_kappa_closed: r.ub_kappa_closed,
            ub_integral_gamma: r.ub_integral_gamma,
            ub_integral_kappa: r.ub_integral_kappa,
            lb_closed: r.lb_closed,
            lb_closed_env: r.lb_closed_env,
            violations: r.violations(sphere_bounds::LOG_SLACK).len(),
        }
    }
}

#[derive(Serialize)]
struct EntropyPoint {
    rho: f64,
    beta: f64,
    entropy: f64,
    var_w: f64,
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn options(epsilon: f64) -> SweepOptions {
    SweepOptions {
        epsilon,
        ..SweepOptions::default()
    }
}

/// All radii at fixed `(q, m, η, ℓ)`: exact values and every bound.
pub fn rho_profile_json(
    q: u64,
    m: usize,
    eta: usize,
    ell: usize,
    epsilon: f64,
) -> Result<String, String> {
    let p = SumRankParams::new(q, m, eta, ell).map_err(|e| e.to_string())?;
    if p.max_radius() > MAX_DEGREE {
        return Err(format!(
            "mu*ell = {} is above the in-browser limit of {MAX_DEGREE}",
            p.max_radius()
        ));
    }
    let rows = rho_sweep(&RhoSweep {
        q,
        m,
        eta,
        ell,
        t_min: 0,
        t_max: None,
        options: options(epsilon),
    })
    .map_err(|e| e.to_string())?;
    to_json(&rows.iter().map(Row::from).collect::<Vec<_>>())
}

/// Fixed radius `t` over every divisor `ℓ` of `n`.
pub fn ell_profile_json(
    q: u64,
    m: usize,
    n: usize,
    t: usize,
    epsilon: f64,
) -> Result<String, String> {
    let out = ell_sweep(&EllSweep {
        q,
        m,
        n,
        t,
        options: options(epsilon),
    })
    .map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Profile {
        rows: Vec<Row>,
        skipped: Vec<usize>,
    }
    to_json(&Profile {
        rows: out.rows.iter().map(Row::from).collect(),
        skipped: out.skipped,
    })
}

/// `β`, `H_ρ` and `Var` of the Boltzmann distribution on one `m × η` block
/// at `points` evenly spaced `ρ ∈ (0, μ)`.
pub fn entropy_curve_json(q: u64, m: usize, eta: usize, points: usize) -> Result<String, String> {
    let block = sumrank_spectrum(q, m, eta).map_err(|e| e.to_string())?;
    let mu = block.mu() as f64;
    let points = points.clamp(2, 2000);
    let curve = (1..=points)
        .map(|i| {
            let rho = mu * i as f64 / (points + 1) as f64;
            solve_beta(&block, rho).map(|model| EntropyPoint {
                rho,
                beta: model.beta,
                entropy: model.entropy,
                var_w: model.var_w,
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    to_json(&curve)
}

#[wasm_bindgen]
pub fn rho_profile(q: u32, m: u32, eta: u32, ell: u32, epsilon: f64) -> Result<String, JsError> {
    rho_profile_json(q.into(), m as usize, eta as usize, ell as usize, epsilon)
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn ell_profile(q: u32, m: u32, n: u32, t: u32, epsilon: f64) -> Result<String, JsError> {
    ell_profile_json(q.into(), m as usize, n as usize, t as usize, epsilon)
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn entropy_curve(q: u32, m: u32, eta: u32, points: u32) -> Result<String, JsError> {
    entropy_curve_json(q.into(), m as usize, eta as usize, points as usize)
        .map_err(|e| JsError::new(&e))
}
