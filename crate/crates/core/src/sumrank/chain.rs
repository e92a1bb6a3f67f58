use super::constants::{gamma_q, gamma_q_m_eta, DEFAULT_GAMMA_TOL};
use super::counts::sumrank_spectrum;
use crate::error::Result;
use crate::metric::{poly_leq_coefficientwise, RealPoly, WeightEnumerator};

/// The four polynomials of the coefficient-wise chain
///
/// `Σ γ_q^{-1} q^{i(m+η-i)} z^i ≼ γ_q^{-1} F(z) ≼ F(γ_{q,m,η}^{-1/μ} z) ≼ S(z)`,
///
/// where `F(z) = ∏_{i=1}^{μ} (1 + q^{m+η-2i+1} z)` and `S` is the exact
/// block generating function. [`LowerBoundChain::power`] raises every member
/// to the same power `ℓ`, which preserves the chain.
#[derive(Debug, Clone)]
pub struct LowerBoundChain {
    pub p_low: RealPoly,
    pub f_over_gamma_q: RealPoly,
    pub f_scaled: RealPoly,
    pub exact: WeightEnumerator,
}

/// Outcome of checking the three links of a [`LowerBoundChain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainCheck {
    pub low_le_gamma: bool,
    pub gamma_le_scaled: bool,
    pub scaled_le_exact: bool,
}

impl ChainCheck {
    pub fn all(&self) -> bool {
        self.low_le_gamma && self.gamma_le_scaled && self.scaled_le_exact
    }
}

impl LowerBoundChain {
    pub fn power(&self, ell: usize) -> Self {
        Self {
            p_low: self.p_low.pow(ell),
            f_over_gamma_q: self.f_over_gamma_q.pow(ell),
            f_scaled: self.f_scaled.pow(ell),
            exact: self.exact.pow(ell),
        }
    }

    /// Checks each link; float coefficients get `rel_slack` relative slack.
    pub fn check(&self, rel_slack: f64) -> ChainCheck {
        ChainCheck {
            low_le_gamma: poly_leq_coefficientwise(&self.p_low, &self.f_over_gamma_q, rel_slack),
            gamma_le_scaled: poly_leq_coefficientwise(
                &self.f_over_gamma_q,
                &self.f_scaled,
                rel_slack,
            ),
            scaled_le_exact: poly_leq_coefficientwise(&self.f_scaled, &self.exact, rel_slack),
        }
    }
}

pub fn lower_bound_chain(q: u64, m: usize, eta: usize) -> Result<LowerBoundChain> {
    let exact = sumrank_spectrum(q, m, eta)?.enumerator();
    let qf = q as f64;
    let mu = m.min(eta);
    let inv_gamma = 1.0 / gamma_q(qf, DEFAULT_GAMMA_TOL)?;
    let scale = gamma_q_m_eta(q, m, eta).powf(-1.0 / mu as f64);

    let p_low = RealPoly::new(
        (0..=mu)
            .map(|i| inv_gamma * qf.powi((i * (m + eta - i)) as i32))
            .collect(),
    );
    let roots = || (1..=mu).map(move |i| qf.powi((m + eta + 1 - 2 * i) as i32));
    let f = RealPoly::from_linear_factors(roots());
    let f_scaled = RealPoly::from_linear_factors(roots().map(|r| r * scale));
    Ok(LowerBoundChain {
        p_low,
        f_over_gamma_q: f.scale(inv_gamma),
        f_scaled,
        exact,
    })
}

/// `(P_low, F_scaled)`: the two ends of the real-coefficient part of the chain.
pub fn lb_chain_polynomials(q: u64, m: usize, eta: usize) -> Result<(RealPoly, RealPoly)> {
    let chain = lower_bound_chain(q, m, eta)?;
    Ok((chain.p_low, chain.f_scaled))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumrank::{q_binomial_real, DEFAULT_GAMMA_TOL};

    #[test]
    fn two_by_two_over_f2() {
        let chain = lower_bound_chain(2, 2, 2).unwrap();
        let unscaled = RealPoly::from_linear_factors([8.0, 2.0]);
        assert_eq!(unscaled.coeffs(), &[1.0, 10.0, 16.0]);
        let s = chain.f_scaled.coeffs();
        assert!((s[1] - 10.0 * (3.0f64 / 8.0).sqrt()).abs() < 1e-12);
        assert!((s[1] - 6.123724356957945).abs() < 1e-12);
        assert!((s[2] - 6.0).abs() < 1e-12);
        assert!(chain.check(1e-9).all());
        let (p_low, _) = lb_chain_polynomials(2, 2, 2).unwrap();
        let g = gamma_q(2.0, DEFAULT_GAMMA_TOL).unwrap();
        assert!((p_low.coeffs()[0] - 1.0 / g).abs() < 1e-15);
        assert!(p_low.coeffs()[0] <= 1.0);
    }

    // Expand ∏(1 + q^{m+η-2i+1} z) coefficient i and compare with
    // q^{i(m+η-i)} [μ i]_{1/q²}.
    #[test]
    fn q_binomial_theorem_identity() {
        for q in [2u64, 3] {
            for m in 1..=4 {
                for eta in 1..=4 {
                    let mu = m.min(eta);
                    let qf = q as f64;
                    let f = RealPoly::from_linear_factors(
                        (1..=mu).map(|i| qf.powi((m + eta + 1 - 2 * i) as i32)),
                    );
                    for i in 0..=mu {
                        let rhs = qf.powi((i * (m + eta - i)) as i32)
                            * q_binomial_real(mu, i, 1.0 / (qf * qf));
                        let lhs = f.coeffs()[i];
                        assert!(
                            (lhs - rhs).abs() <= 1e-12 * rhs,
                            "q={q} m={m} eta={eta} i={i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chain_holds_on_grid() {
        for q in [2u64, 3] {
            for m in 1..=4 {
                for eta in 1..=4 {
                    let chain = lower_bound_chain(q, m, eta).unwrap();
                    for ell in 1..=3 {
                        let c = chain.power(ell).check(1e-9);
                        assert!(c.all(), "q={q} m={m} eta={eta} ell={ell}: {c:?}");
                    }
                }
            }
        }
    }
}
