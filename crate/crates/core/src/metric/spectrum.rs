use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::log::LogValue;
use super::poly::{ogf_from_spectrum, WeightEnumerator};
use crate::error::{invalid, Result};

/// Weight multiplicities of a finite alphabet.
///
/// `counts()[w]` is the number of alphabet elements of weight `w`. The
/// spectrum also carries the logarithm base used for every derived
/// quantity (`log_q`, `q^{-β}`).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSpectrum {
    counts: Vec<BigUint>,
    log_base: f64,
}

impl WeightSpectrum {
    /// Build a spectrum from raw counts. Trailing zero counts are dropped.
    ///
    /// Requires `counts[0] = 1` (only the identity has weight zero), at
    /// least one element of positive weight, and `log_base > 1`.
    pub fn from_counts(mut counts: Vec<BigUint>, log_base: f64) -> Result<Self> {
        while counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        if counts.first() != Some(&BigUint::one()) {
            return Err(invalid("weight 0 must be attained by exactly one element"));
        }
        if counts.len() < 2 {
            return Err(invalid("alphabet has no element of positive weight"));
        }
        check_base(log_base)?;
        Ok(Self { counts, log_base })
    }

    pub fn hamming(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(invalid(format!("Hamming alphabet needs q >= 2, got {q}")));
        }
        Self::from_counts(vec![BigUint::one(), BigUint::from(q - 1)], q as f64)
    }

    /// Lee weight on `Z/nZ`, logarithm base `n`.
    pub fn lee(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("Lee alphabet needs n >= 2, got {n}")));
        }
        let mu = (n / 2) as usize;
        let mut counts = vec![BigUint::from(2u32); mu + 1];
        counts[0] = BigUint::one();
        if n.is_multiple_of(2) {
            counts[mu] = BigUint::one();
        }
        Self::from_counts(counts, n as f64)
    }

    pub fn with_log_base(mut self, log_base: f64) -> Result<Self> {
        check_base(log_base)?;
        self.log_base = log_base;
        Ok(self)
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Largest weight attained.
    pub fn mu(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn alphabet_size(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn log_base(&self) -> f64 {
        self.log_base
    }

    /// `log_base(counts[w])` per weight; zero counts map to negative infinity.
    pub fn log_counts(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|c| LogValue::of_biguint_or_zero(c, self.log_base).value())
            .collect()
    }

    pub fn log_alphabet_size(&self) -> f64 {
        LogValue::of_biguint_or_zero(&self.alphabet_size(), self.log_base).value()
    }

    /// Mean weight of a uniformly random alphabet element.
    pub fn average_weight(&self) -> BigRational {
        let total: BigUint = self
            .counts
            .iter()
            .enumerate()
            .map(|(w, c)| c * BigUint::from(w))
            .sum();
        BigRational::new(BigInt::from(total), BigInt::from(self.alphabet_size()))
    }

    pub fn enumerator(&self) -> WeightEnumerator {
        ogf_from_spectrum(self)
    }
}

fn check_base(log_base: f64) -> Result<()> {
    if log_base > 1.0 && log_base.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!(
            "log base must be a finite real > 1, got {log_base}"
        )))
    }
}

pub fn hamming_spectrum(q: u64) -> Result<WeightSpectrum> {
    WeightSpectrum::hamming(q)
}

pub fn lee_spectrum(n: u64) -> Result<WeightSpectrum> {
    WeightSpectrum::lee(n)
}

pub fn average_weight(s: &WeightSpectrum) -> BigRational {
    s.average_weight()
}

/// `|S_t|` in `A^ℓ`: the coefficient of `z^t` in `F_A(z)^ℓ`.
///
/// Radii are unsigned, so the negative-radius case cannot be expressed.
pub fn sphere_size(s: &WeightSpectrum, ell: usize, t: usize) -> BigUint {
    if t > s.mu() * ell {
        return BigUint::zero();
    }
    s.enumerator()
        .pow(ell)
        .coefficient(t)
        .cloned()
        .unwrap_or_default()
}

/// `|B_t|` in `A^ℓ`: the sum of sphere sizes `0..=t`.
pub fn ball_size(s: &WeightSpectrum, ell: usize, t: usize) -> BigUint {
    let f = s.enumerator().pow(ell);
    f.coeffs().iter().take(t.saturating_add(1)).sum()
}
