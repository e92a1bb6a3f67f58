//! Generic coordinate-additive metric machinery.
//!
//! An alphabet is described only through its [`WeightSpectrum`]; everything
//! about `A^ℓ` follows from powers of the spectrum's generating polynomial
//! ([`WeightEnumerator`]).

mod envelope;
mod log;
mod poly;
mod spectrum;

pub use envelope::upper_concave_envelope;
pub use log::{log2_biguint, log_q_of_bigint, log_sum_exp, LogValue};
pub use poly::{
    ogf_from_spectrum, ogf_pow, poly_leq_coefficientwise, Coefficient, CoefficientSeq, RealPoly,
    WeightEnumerator,
};
pub use spectrum::{
    average_weight, ball_size, hamming_spectrum, lee_spectrum, sphere_size, WeightSpectrum,
};
