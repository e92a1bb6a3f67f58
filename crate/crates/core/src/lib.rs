//! Exact sphere sizes and bounds for coordinate-additive metrics.
//!
//! Every coordinate-additive weight on an alphabet `A` is summarized by its
//! weight spectrum, the number of alphabet elements at each weight. The sphere
//! sizes of `A^ℓ` are then the coefficients of the `ℓ`-th power of the
//! spectrum's generating polynomial, which this crate computes exactly with
//! big integers.
//!
//! On top of the exact counts the crate evaluates:
//!
//! - entropy / saddle-point bounds for any alphabet ([`entropy`]), built on
//!   the Boltzmann family `P_β(a) ∝ q^{-β·wt(a)}`;
//! - closed-form upper and lower bounds for the sum-rank metric ([`sumrank`]);
//! - sweep tables that place the exact values between all of these bounds
//!   ([`compare`]).
//!
//! All logarithms are taken in the base stored on the spectrum (the field
//! size `q` for sum-rank and Hamming alphabets).
//!
//! ```
//! use sphere_bounds::sumrank::{exact_sphere_sequence, SumRankParams};
//!
//! let p = SumRankParams::new(2, 2, 2, 2).unwrap();
//! let spheres = exact_sphere_sequence(&p).unwrap();
//! let sizes: Vec<u64> = spheres.coeffs().iter().map(|c| c.try_into().unwrap()).collect();
//! assert_eq!(sizes, vec![1, 18, 93, 108, 36]);
//! ```

#![forbid(unsafe_code)]
// Range checks are written `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod compare;
pub mod entropy;
mod error;
pub mod metric;
pub mod sumrank;

pub use error::{Error, Result};
pub use metric::{LogValue, WeightEnumerator, WeightSpectrum};

/// Absolute slack, in `log_q` units, allowed when a floating-point bound is
/// compared against an exact value.
pub const LOG_SLACK: f64 = 1e-9;
