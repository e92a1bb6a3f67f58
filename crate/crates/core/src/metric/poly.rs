use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::log::log2_biguint;
use super::spectrum::WeightSpectrum;

/// Polynomial with non-negative big-integer coefficients, stored densely.
///
/// Coefficient `i` is `[z^i] F(z)`. Trailing zeros are never stored, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightEnumerator {
    coeffs: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![BigUint::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigUint> {
        self.coeffs
    }

    /// Index of the last nonzero coefficient (0 for constants and for zero).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> Option<&BigUint> {
        self.coeffs.get(i)
    }

    /// `F(1)`, the sum of all coefficients.
    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// `F^ell` by square-and-multiply.
    pub fn pow(&self, mut ell: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while ell > 0 {
            if ell & 1 == 1 {
                result = result.mul(&base);
            }
            ell >>= 1;
            if ell > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Coefficient-wise `self ≼ other` over the integers.
    pub fn leq(&self, other: &Self) -> bool {
        let zero = BigUint::zero();
        (0..self.coeffs.len().max(other.coeffs.len()))
            .all(|i| self.coeffs.get(i).unwrap_or(&zero) <= other.coeffs.get(i).unwrap_or(&zero))
    }
}

pub fn ogf_from_spectrum(s: &WeightSpectrum) -> WeightEnumerator {
    WeightEnumerator::from_coeffs(s.counts().to_vec())
}

pub fn ogf_pow(f: &WeightEnumerator, ell: usize) -> WeightEnumerator {
    f.pow(ell)
}

/// Dense polynomial with real coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Product of the linear factors `(1 + r_i z)`.
    pub fn from_linear_factors(roots: impl IntoIterator<Item = f64>) -> Self {
        roots.into_iter().fold(Self::new(vec![1.0]), |acc, r| {
            acc.mul(&Self::new(vec![1.0, r]))
        })
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, mut ell: usize) -> Self {
        let mut result = Self::new(vec![1.0]);
        let mut base = self.clone();
        while ell > 0 {
            if ell & 1 == 1 {
                result = result.mul(&base);
            }
            ell >>= 1;
            if ell > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// A single coefficient, either exact or floating point.
#[derive(Debug, Clone, Copy)]
pub enum Coefficient<'a> {
    Exact(&'a BigUint),
    Real(f64),
}

/// Anything that can be read as a coefficient sequence; missing
/// coefficients are zero.
pub trait CoefficientSeq {
    fn num_coeffs(&self) -> usize;
    fn coefficient_at(&self, i: usize) -> Option<Coefficient<'_>>;
}

impl CoefficientSeq for WeightEnumerator {
    fn num_coeffs(&self) -> usize {
        self.coeffs.len()
    }

    fn coefficient_at(&self, i: usize) -> Option<Coefficient<'_>> {
        self.coeffs.get(i).map(Coefficient::Exact)
    }
}

impl CoefficientSeq for RealPoly {
    fn num_coeffs(&self) -> usize {
        self.coeffs.len()
    }

    fn coefficient_at(&self, i: usize) -> Option<Coefficient<'_>> {
        self.coeffs.get(i).copied().map(Coefficient::Real)
    }
}

/// `F ≼_c G`: every coefficient of `f` is at most the matching one of `g`.
///
/// Two exact coefficients are compared exactly. When either side is a
/// float, that side is relaxed by `rel_slack` of its own magnitude in the
/// direction that favors the inequality.
pub fn poly_leq_coefficientwise<F, G>(f: &F, g: &G, rel_slack: f64) -> bool
where
    F: CoefficientSeq + ?Sized,
    G: CoefficientSeq + ?Sized,
{
    let n = f.num_coeffs().max(g.num_coeffs());
    (0..n).all(|i| coefficient_leq(f.coefficient_at(i), g.coefficient_at(i), rel_slack))
}

fn coefficient_leq(a: Option<Coefficient<'_>>, b: Option<Coefficient<'_>>, slack: f64) -> bool {
    use Coefficient::*;
    match (a, b) {
        (Some(Exact(x)), Some(Exact(y))) => x <= y,
        (Some(Exact(x)), None) => x.is_zero(),
        (None, Some(Exact(_))) | (None, None) => true,
        _ => {
            let (la, a_real) = signed_log2(a);
            let (lb, b_real) = signed_log2(b);
            let a_relaxed = if a_real { relax(la, -slack) } else { la };
            let b_relaxed = if b_real { relax(lb, slack) } else { lb };
            signed_log_leq(a_relaxed, b_relaxed)
        }
    }
}

// (sign, log2 |x|), with zero as (0, -inf).
type SignedLog = (i8, f64);

fn signed_log2(c: Option<Coefficient<'_>>) -> (SignedLog, bool) {
    match c {
        None => ((0, f64::NEG_INFINITY), false),
        Some(Coefficient::Exact(x)) if x.is_zero() => ((0, f64::NEG_INFINITY), false),
        Some(Coefficient::Exact(x)) => ((1, log2_biguint(x)), false),
        Some(Coefficient::Real(0.0)) => ((0, f64::NEG_INFINITY), true),
        Some(Coefficient::Real(v)) => ((v.signum() as i8, v.abs().log2()), true),
    }
}

// Move x by `delta` of its own magnitude (delta > 0 increases the value).
fn relax((sign, mag): SignedLog, delta: f64) -> SignedLog {
    match sign {
        0 => (0, mag),
        1 => (1, mag + (1.0 + delta).log2()),
        _ => (-1, mag + (1.0 - delta).log2()),
    }
}

fn signed_log_leq((sa, ma): SignedLog, (sb, mb): SignedLog) -> bool {
    if sa != sb {
        return sa < sb;
    }
    match sa {
        0 => true,
        1 => ma <= mb,
        _ => ma >= mb,
    }
}
