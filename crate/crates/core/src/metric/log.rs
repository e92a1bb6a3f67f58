use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A quantity stored as its logarithm `log_base(x)`.
///
/// `x = 0` is represented by a value of negative infinity; it is only
/// produced through [`LogValue::neg_infinity`] or
/// [`LogValue::of_biguint_or_zero`], never by [`log_q_of_bigint`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogValue {
    value: f64,
    base: f64,
}

impl LogValue {
    pub fn new(value: f64, base: f64) -> Self {
        Self { value, base }
    }

    pub fn neg_infinity(base: f64) -> Self {
        Self {
            value: f64::NEG_INFINITY,
            base,
        }
    }

    pub fn of_biguint(x: &BigUint, base: f64) -> Result<Self> {
        log_q_of_bigint(x, base)
    }

    /// Like [`LogValue::of_biguint`], but maps zero to negative infinity.
    pub fn of_biguint_or_zero(x: &BigUint, base: f64) -> Self {
        Self::new(log2_biguint(x) / base.log2(), base)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn is_neg_infinity(&self) -> bool {
        self.value == f64::NEG_INFINITY
    }

    /// Multiply the stored logarithm by `factor`, e.g. `1/ℓ` to normalize.
    pub fn scaled(self, factor: f64) -> Self {
        Self::new(self.value * factor, self.base)
    }
}

/// `log2(x)` for a big integer, from its bit length and top 53 bits.
///
/// Returns negative infinity for zero.
pub fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 53 {
        return (x.to_u64().expect("fits in 53 bits") as f64).log2();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_u64().expect("exactly 53 bits") as f64;
    shift as f64 + top.log2()
}

/// `log_base(x)` for `x ≥ 1`, accurate to about 1e-15 relative error.
pub fn log_q_of_bigint(x: &BigUint, base: f64) -> Result<LogValue> {
    if !(base > 1.0) || !base.is_finite() {
        return Err(Error::Domain(format!("log base must be > 1, got {base}")));
    }
    if x.is_zero() {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    Ok(LogValue::new(log2_biguint(x) / base.log2(), base))
}

/// `ln Σ exp(a_i)` with the maximum factored out.
///
/// Terms equal to negative infinity contribute nothing; an empty or all
/// negative-infinity input yields negative infinity.
pub fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    let sum: f64 = terms.iter().map(|&a| (a - max).exp()).sum();
    max + sum.ln()
}
