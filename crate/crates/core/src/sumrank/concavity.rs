use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::counts::{exact_sphere_sequence, num_matrices};
use super::params::SumRankParams;
use crate::error::Result;

/// Result of [`log_concavity_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogConcavityReport {
    /// First interior rank `i` where `NM(i)²/(NM(i-1)NM(i+1))` differs from
    /// the closed-form ratio or falls below `q²`.
    pub block_witness: Option<usize>,
    /// First interior radius where `s_i² < s_{i-1} s_{i+1}` in the `ℓ`-fold
    /// sphere sequence.
    pub sequence_witness: Option<usize>,
}

impl LogConcavityReport {
    pub fn passed(&self) -> bool {
        self.block_witness.is_none() && self.sequence_witness.is_none()
    }
}

fn rat(x: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `(q^m - q^{i-1})/(q^m - q^i) · (q^η - q^{i-1})/(q^η - q^i) · q^i (q^{i+1} - 1) / (q^{i-1}(q^i - 1))`
/// for `0 < i < μ`.
pub fn nm_ratio_closed_form(q: u64, m: usize, eta: usize, i: usize) -> BigRational {
    debug_assert!(i > 0 && i < m.min(eta));
    let qb = BigUint::from(q);
    let pw = |e: usize| qb.pow(e as u32);
    let one = || BigUint::from(1u32);
    let factor = |a: BigUint, b: BigUint| rat(a) / rat(b);
    factor(pw(m) - pw(i - 1), pw(m) - pw(i))
        * factor(pw(eta) - pw(i - 1), pw(eta) - pw(i))
        * factor(pw(i) * (pw(i + 1) - one()), pw(i - 1) * (pw(i) - one()))
}

/// First interior index `i` with `s_i² < s_{i-1} s_{i+1}`, if any.
pub fn first_log_concavity_violation(seq: &[BigUint]) -> Option<usize> {
    (1..seq.len().saturating_sub(1)).find(|&i| &seq[i] * &seq[i] < &seq[i - 1] * &seq[i + 1])
}

/// Exact log-concavity checks for the rank distribution of one block and for
/// the `ℓ`-fold sphere sequence.
pub fn log_concavity_check(p: &SumRankParams) -> Result<LogConcavityReport> {
    let (q, m, eta) = (p.q(), p.m(), p.eta());
    let nm: Vec<BigUint> = (0..=p.mu()).map(|t| num_matrices(q, m, eta, t)).collect();
    let q_sq = rat(BigUint::from(q) * BigUint::from(q));
    let block_witness = (1..p.mu()).find(|&i| {
        let denom = &nm[i - 1] * &nm[i + 1];
        if denom.is_zero() {
            return true;
        }
        let ratio = rat(&nm[i] * &nm[i]) / rat(denom);
        ratio != nm_ratio_closed_form(q, m, eta, i) || ratio < q_sq
    });
    let seq = exact_sphere_sequence(p)?;
    Ok(LogConcavityReport {
        block_witness,
        sequence_witness: first_log_concavity_violation(seq.coeffs()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn two_by_two_ratio() {
        // 9^2 / (1 * 6) = 27/2
        let r = nm_ratio_closed_form(2, 2, 2, 1);
        assert_eq!(r, BigRational::new(BigInt::from(27), BigInt::from(2)));
        let p = SumRankParams::new(2, 2, 2, 2).unwrap();
        assert!(log_concavity_check(&p).unwrap().passed());
        assert!(BigUint::from(93u32).pow(2) >= BigUint::from(18u32 * 108));
        assert!(BigUint::from(108u32).pow(2) >= BigUint::from(93u32 * 36));
    }

    #[test]
    fn hamming_binomials_log_concave() {
        let p = SumRankParams::new(3, 1, 1, 12).unwrap();
        let report = log_concavity_check(&p).unwrap();
        assert_eq!(
            report,
            LogConcavityReport {
                block_witness: None,
                sequence_witness: None
            }
        );
    }

    #[test]
    fn detects_violation() {
        assert_eq!(first_log_concavity_violation(&big(&[1, 1, 5, 1])), Some(1));
        assert_eq!(first_log_concavity_violation(&big(&[1, 3, 3, 1])), None);
        assert_eq!(first_log_concavity_violation(&big(&[4])), None);
        assert_eq!(first_log_concavity_violation(&[]), None);
    }

    #[test]
    fn ratios_match_closed_form_on_grid() {
        for q in [2u64, 3] {
            for m in 1..=6 {
                for eta in 1..=6 {
                    let p = SumRankParams::new(q, m, eta, 1).unwrap();
                    assert_eq!(log_concavity_check(&p).unwrap().block_witness, None);
                }
            }
        }
    }
}
