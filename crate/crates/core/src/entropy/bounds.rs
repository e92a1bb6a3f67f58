use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::boltzmann::{solve_beta, BoltzmannModel};
use crate::error::{invalid, Error, Result};
use crate::metric::{LogValue, WeightSpectrum};

fn interior_model(s: &WeightSpectrum, ell: usize, t: usize) -> Result<BoltzmannModel> {
    if ell == 0 {
        return Err(invalid("ell must be positive"));
    }
    let max = s.mu() * ell;
    if t == 0 || t >= max {
        return Err(Error::Domain(format!(
            "entropy bounds need 0 < t < {max}, got t = {t}"
        )));
    }
    solve_beta(s, t as f64 / ell as f64)
}

/// `H_{t/ℓ}`, an upper bound on `(1/ℓ) log_q |S_t|` for `0 < t < μℓ`.
pub fn ub_entropy_sphere(s: &WeightSpectrum, ell: usize, t: usize) -> Result<LogValue> {
    let model = interior_model(s, ell, t)?;
    Ok(LogValue::new(model.entropy, s.log_base()))
}

/// Upper bound on `(1/ℓ) log_q |B_t|`: `H_{t/ℓ}` below the average weight,
/// `log_q |A|` from there on.
pub fn ub_entropy_ball(s: &WeightSpectrum, ell: usize, t: usize) -> Result<LogValue> {
    if ell == 0 {
        return Err(invalid("ell must be positive"));
    }
    let max = s.mu() * ell;
    if t == 0 {
        return Err(Error::Domain("ball bound needs t > 0".into()));
    }
    if t > max {
        return Err(Error::RadiusOutOfRange { t, max });
    }
    let rho = BigRational::new(BigInt::from(t), BigInt::from(ell));
    if rho >= s.average_weight() {
        return Ok(LogValue::new(s.log_alphabet_size(), s.log_base()));
    }
    ub_entropy_sphere(s, ell, t)
}

/// `δ = sqrt(ℓ·Var / (1 - ε))`, the window half-width at which Chebyshev
/// leaves probability `ε` inside the window.
pub fn delta_of_epsilon(ell: usize, var_w: f64, epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Domain(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    if !(var_w > 0.0) {
        return Err(Error::Domain(format!(
            "variance must be positive, got {var_w}"
        )));
    }
    Ok((ell as f64 * var_w / (1.0 - epsilon)).sqrt())
}

/// Window lower bounds around `t = ℓρ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowBound {
    pub t_center: usize,
    pub delta: f64,
    pub epsilon: f64,
    pub beta: f64,
    /// Lower bound on `log_q Σ_{|j|<δ} |S_{t+j}|`.
    pub sum_lower_log: LogValue,
    /// Lower bound on `max_{|j|<δ} (1/ℓ) log_q |S_{t+j}|`.
    pub max_lower_log: LogValue,
}

impl WindowBound {
    /// Number of integer offsets `j` with `|j| < δ`, i.e. `2⌈δ⌉ - 1`.
    pub fn window_len(&self) -> usize {
        2 * self.delta.ceil() as usize - 1
    }
}

/// Radii `t + j` with `|j| < δ`, clipped to `0..=max_radius`.
pub fn window_radii(t: usize, delta: f64, max_radius: usize) -> RangeInclusive<usize> {
    let reach = (delta.ceil() as usize).saturating_sub(1);
    t.saturating_sub(reach)..=(t + reach).min(max_radius)
}

/// Both window bounds for `0 < t < μℓ` and `ε ∈ (0, 1)`.
///
/// `sum_lower_log = log_q ε + ℓH - |β|δ`;
/// `max_lower_log = H - |β|δ/ℓ - (1/ℓ) log_q((2⌈δ⌉ - 1)/ε)`.
pub fn lb_entropy_window_sum(
    s: &WeightSpectrum,
    ell: usize,
    t: usize,
    epsilon: f64,
) -> Result<WindowBound> {
    let model = interior_model(s, ell, t)?;
    let delta = delta_of_epsilon(ell, model.var_w, epsilon)?;
    let ln_q = s.log_base().ln();
    let ellf = ell as f64;
    let shift = model.beta.abs() * delta;
    let sum = epsilon.ln() / ln_q + ellf * model.entropy - shift;
    let count = (2.0 * delta.ceil() - 1.0).max(1.0);
    let max = model.entropy - shift / ellf - (count / epsilon).ln() / ln_q / ellf;
    Ok(WindowBound {
        t_center: t,
        delta,
        epsilon,
        beta: model.beta,
        sum_lower_log: LogValue::new(sum, s.log_base()),
        max_lower_log: LogValue::new(max, s.log_base()),
    })
}

/// Same computation as [`lb_entropy_window_sum`]; the per-sphere bound is
/// [`WindowBound::max_lower_log`].
pub fn lb_entropy_max(
    s: &WeightSpectrum,
    ell: usize,
    t: usize,
    epsilon: f64,
) -> Result<WindowBound> {
    lb_entropy_window_sum(s, ell, t, epsilon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{log2_biguint, ogf_pow};
    use crate::sumrank::sumrank_spectrum;
    use num_bigint::BigUint;

    fn window_sum(seq: &[BigUint], radii: RangeInclusive<usize>) -> BigUint {
        seq[radii].iter().sum()
    }

    fn normalized_logs(s: &WeightSpectrum, ell: usize) -> (Vec<BigUint>, Vec<f64>) {
        let seq = ogf_pow(&s.enumerator(), ell).into_coeffs();
        let logs = seq
            .iter()
            .map(|c| log2_biguint(c) / s.log_base().log2() / ell as f64)
            .collect();
        (seq, logs)
    }

    fn check_window(s: &WeightSpectrum, ell: usize, t: usize, eps: f64) -> WindowBound {
        let (seq, logs) = normalized_logs(s, ell);
        let b = lb_entropy_window_sum(s, ell, t, eps).unwrap();
        let radii = window_radii(t, b.delta, s.mu() * ell);
        let sum = log2_biguint(&window_sum(&seq, radii.clone())) / s.log_base().log2();
        assert!(
            b.sum_lower_log.value() <= sum + 1e-9,
            "sum bound at t={t} eps={eps}"
        );
        let max = radii.map(|r| logs[r]).fold(f64::NEG_INFINITY, f64::max);
        assert!(
            b.max_lower_log.value() <= max + 1e-9,
            "max bound at t={t} eps={eps}"
        );
        b
    }

    #[test]
    fn sphere_examples() {
        let h2 = WeightSpectrum::hamming(2).unwrap();
        assert_eq!(ub_entropy_sphere(&h2, 4, 2).unwrap().value(), 1.0);
        assert!(1.0 >= 6f64.log2() / 4.0);
        let block = sumrank_spectrum(2, 2, 2).unwrap();
        let h = ub_entropy_sphere(&block, 2, 2).unwrap().value();
        assert!(h >= 93f64.log2() / 2.0);
        assert!(matches!(
            ub_entropy_sphere(&h2, 4, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            ub_entropy_sphere(&h2, 4, 4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ball_examples() {
        let h2 = WeightSpectrum::hamming(2).unwrap();
        let b1 = ub_entropy_ball(&h2, 4, 1).unwrap().value();
        assert!((b1 - 0.8112781244591328).abs() < 1e-11);
        assert!(b1 >= 5f64.log2() / 4.0);
        assert_eq!(ub_entropy_ball(&h2, 4, 3).unwrap().value(), 1.0);
        assert_eq!(ub_entropy_ball(&h2, 4, 4).unwrap().value(), 1.0);
        assert!(ub_entropy_ball(&h2, 4, 0).is_err());
        assert!(matches!(
            ub_entropy_ball(&h2, 4, 5),
            Err(Error::RadiusOutOfRange { t: 5, max: 4 })
        ));
    }

    #[test]
    fn delta_examples() {
        assert!((delta_of_epsilon(100, 0.25, 0.75).unwrap() - 10.0).abs() < 1e-12);
        let (ell, var, eps) = (37, 0.31, 0.2);
        let d = delta_of_epsilon(ell, var, eps).unwrap();
        assert!((1.0 - ell as f64 * var / (d * d) - eps).abs() < 1e-15);
        assert!((delta_of_epsilon(9, 1.0, 1e-300).unwrap() - 3.0).abs() < 1e-15);
        assert!(delta_of_epsilon(9, 1.0, 1.0).is_err());
        assert!(delta_of_epsilon(9, 0.0, 0.5).is_err());
    }

    #[test]
    fn window_clipping() {
        assert_eq!(window_radii(5, 2.5, 100), 3..=7);
        assert_eq!(window_radii(5, 3.0, 100), 3..=7);
        assert_eq!(window_radii(1, 3.0, 2), 0..=2);
        assert_eq!(window_radii(4, 0.5, 9), 4..=4);
    }

    #[test]
    fn window_bounds_hold() {
        let h2 = WeightSpectrum::hamming(2).unwrap();
        let uniform = check_window(&h2, 8, 4, 0.3);
        assert_eq!(uniform.beta, 0.0);
        assert!((uniform.sum_lower_log.value() - (0.3f64.log2() + 8.0)).abs() < 1e-12);
        check_window(&h2, 100, 50, 0.5);
        check_window(&h2, 50, 20, 0.1);
        for eps in [0.01, 0.5] {
            let b = check_window(&h2, 50, 20, eps);
            assert_eq!(b.epsilon, eps);
        }
        let lee = WeightSpectrum::lee(7).unwrap();
        for t in 1..60 {
            check_window(&lee, 20, t, 0.05);
        }
    }
}
