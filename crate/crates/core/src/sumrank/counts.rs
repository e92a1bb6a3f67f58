use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::params::{prime_power_decomposition, SumRankParams};
use crate::error::{Error, Result};
use crate::metric::{WeightEnumerator, WeightSpectrum};

/// Gaussian binomial `[a b]_q`, the number of `b`-dimensional subspaces of
/// `F_q^a`. Zero when `b < 0` or `b > a`.
///
/// # Panics
/// If `q < 2`.
pub fn q_binomial(a: u32, b: i64, q: u64) -> BigUint {
    assert!(q >= 2, "q-binomial needs q >= 2");
    if b < 0 || b > i64::from(a) {
        return BigUint::zero();
    }
    let b = b as u32;
    let q = BigUint::from(q);
    let one = BigUint::one();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=b {
        num *= q.pow(a - b + i) - &one;
        den *= q.pow(i) - &one;
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

/// `∏_{i=1}^{b} (1 - x^{a-b+i}) / (1 - x^i)` for real `0 < x < 1`.
pub fn q_binomial_real(a: usize, b: usize, x: f64) -> f64 {
    log_q_binomial_real(a, b, x).exp()
}

/// Natural log of [`q_binomial_real`]; negative infinity when `b > a`.
pub fn log_q_binomial_real(a: usize, b: usize, x: f64) -> f64 {
    if b > a {
        return f64::NEG_INFINITY;
    }
    (1..=b)
        .map(|i| (-x.powi((a - b + i) as i32)).ln_1p() - (-x.powi(i as i32)).ln_1p())
        .sum()
}

/// Number of `m × η` matrices of rank `t` over `F_q`:
/// `[m t]_q ∏_{i<t} (q^η - q^i)`.
pub fn num_matrices(q: u64, m: usize, eta: usize, t: usize) -> BigUint {
    if t > m.min(eta) {
        return BigUint::zero();
    }
    let qb = BigUint::from(q);
    let q_eta = qb.pow(eta as u32);
    (0..t).fold(q_binomial(m as u32, t as i64, q), |acc, i| {
        acc * (&q_eta - qb.pow(i as u32))
    })
}

/// Rank distribution of a single `m × η` block, logarithm base `q`.
pub fn sumrank_spectrum(q: u64, m: usize, eta: usize) -> Result<WeightSpectrum> {
    if prime_power_decomposition(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if m == 0 || eta == 0 {
        return Err(crate::error::invalid("block dimensions must be positive"));
    }
    let counts = (0..=m.min(eta))
        .map(|t| num_matrices(q, m, eta, t))
        .collect();
    WeightSpectrum::from_counts(counts, q as f64)
}

/// All sum-rank sphere sizes `|S_t|`, `t = 0..=μℓ`.
pub fn exact_sphere_sequence(p: &SumRankParams) -> Result<WeightEnumerator> {
    Ok(sumrank_spectrum(p.q(), p.m(), p.eta())?
        .enumerator()
        .pow(p.ell()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    // Span of a set of vectors in F_2^dim, each packed as a bitmask.
    fn span_f2(gens: &[u32]) -> BTreeSet<u32> {
        let mut span = BTreeSet::from([0u32]);
        for &g in gens {
            let shifted: Vec<u32> = span.iter().map(|v| v ^ g).collect();
            span.extend(shifted);
        }
        span
    }

    fn count_subspaces_f2(dim: u32, k: usize) -> usize {
        let mut seen = BTreeSet::new();
        let vectors: Vec<u32> = (1..1u32 << dim).collect();
        let mut stack = vec![(Vec::<u32>::new(), 0usize)];
        while let Some((gens, start)) = stack.pop() {
            if gens.len() == k {
                let s = span_f2(&gens);
                if s.len() == 1 << k {
                    seen.insert(s.into_iter().collect::<Vec<_>>());
                }
                continue;
            }
            for (idx, &v) in vectors.iter().enumerate().skip(start) {
                let mut next = gens.clone();
                next.push(v);
                stack.push((next, idx + 1));
            }
        }
        seen.len()
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(count_subspaces_f2(2, 1), 3);
        assert_eq!(q_binomial(2, 1, 2), big(3));
        assert_eq!(count_subspaces_f2(4, 2), 35);
        assert_eq!(q_binomial(4, 2, 2), big(35));
        for a in 0..8 {
            assert_eq!(q_binomial(a, 0, 3), big(1));
            assert_eq!(q_binomial(a, a as i64, 3), big(1));
            assert_eq!(q_binomial(a, -1, 3), big(0));
            assert_eq!(q_binomial(a, a as i64 + 1, 3), big(0));
        }
    }

    #[test]
    fn q_binomial_symmetry_and_pascal() {
        // [a b]_q = [a-1 b-1]_q + q^b [a-1 b]_q
        for q in [2u64, 3, 4, 5] {
            for a in 1..9u32 {
                for b in 0..=a as i64 {
                    assert_eq!(q_binomial(a, b, q), q_binomial(a, a as i64 - b, q));
                    let rhs = q_binomial(a - 1, b - 1, q)
                        + BigUint::from(q).pow(b as u32) * q_binomial(a - 1, b, q);
                    assert_eq!(q_binomial(a, b, q), rhs);
                }
            }
        }
    }

    #[test]
    fn q_binomial_real_examples() {
        assert_eq!(q_binomial_real(3, 0, 0.25), 1.0);
        assert!((q_binomial_real(2, 1, 0.25) - 1.25).abs() < 1e-15);
        assert!((q_binomial_real(3, 1, 0.25) - 1.3125).abs() < 1e-15);
        assert_eq!(q_binomial_real(2, 3, 0.25), 0.0);
    }

    #[test]
    fn q_binomial_bracketed_by_powers() {
        for q in [2u64, 3] {
            let x = 1.0 / (q * q) as f64;
            for mu in 0..=6usize {
                for i in 0..=mu {
                    let lhs = q_binomial_real(mu, i, x) * (q as f64).powi((i * (mu - i)) as i32);
                    let rhs: f64 =
                        num_traits::ToPrimitive::to_f64(&q_binomial(mu as u32, i as i64, q))
                            .unwrap();
                    assert!(
                        lhs <= rhs * (1.0 + 1e-12),
                        "q={q} mu={mu} i={i}: {lhs} > {rhs}"
                    );
                }
            }
        }
    }

    // Rank over F_2 of a 2x2 matrix packed into 4 bits.
    fn rank_2x2_f2(bits: u32) -> usize {
        let (a, b, c, d) = (bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1);
        match (bits, (a * d) ^ (b * c)) {
            (0, _) => 0,
            (_, 1) => 2,
            _ => 1,
        }
    }

    #[test]
    fn num_matrices_examples() {
        let by_rank = |r| (0..16).filter(|&b| rank_2x2_f2(b) == r).count() as u64;
        assert_eq!(num_matrices(2, 2, 2, 1), big(by_rank(1)));
        assert_eq!(num_matrices(2, 2, 2, 2), big(by_rank(2)));
        assert_eq!(by_rank(2), 6);
        assert_eq!(num_matrices(5, 3, 4, 0), big(1));
        assert_eq!(num_matrices(2, 2, 3, 3), big(0));
    }

    #[test]
    fn num_matrices_symmetric_and_normalized() {
        for q in [2u64, 3, 4, 5] {
            for m in 1..6 {
                for eta in 1..6 {
                    let total: BigUint = (0..=m.min(eta)).map(|t| num_matrices(q, m, eta, t)).sum();
                    assert_eq!(total, BigUint::from(q).pow((m * eta) as u32));
                    for t in 0..=6 {
                        assert_eq!(num_matrices(q, m, eta, t), num_matrices(q, eta, m, t));
                    }
                }
            }
        }
    }

    #[test]
    fn spectra() {
        let c = |q, m, e| -> Vec<u64> {
            sumrank_spectrum(q, m, e)
                .unwrap()
                .counts()
                .iter()
                .map(|x| x.try_into().unwrap())
                .collect()
        };
        assert_eq!(c(2, 2, 2), vec![1, 9, 6]);
        assert_eq!(c(2, 2, 3), vec![1, 21, 42]);
        assert_eq!(c(3, 1, 1), vec![1, 2]);
        assert_eq!(sumrank_spectrum(6, 2, 2), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn exact_sequences() {
        let seq = |q, m, e, l| -> Vec<u64> {
            exact_sphere_sequence(&SumRankParams::new(q, m, e, l).unwrap())
                .unwrap()
                .coeffs()
                .iter()
                .map(|x| x.try_into().unwrap())
                .collect()
        };
        assert_eq!(seq(2, 2, 2, 2), vec![1, 18, 93, 108, 36]);
        assert_eq!(seq(2, 1, 1, 3), vec![1, 3, 3, 1]);
        let p = SumRankParams::new(3, 2, 3, 4).unwrap();
        let f = exact_sphere_sequence(&p).unwrap();
        assert_eq!(f.degree(), 8);
        assert_eq!(f.sum(), BigUint::from(3u32).pow(24));
    }
}
