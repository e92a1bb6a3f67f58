use num_bigint::BigUint;

use super::params::prime_power_decomposition;
use crate::error::{invalid, Error, Result};
use crate::metric::WeightSpectrum;

/// Largest matrix space `q^{mη}` the brute-force oracle will enumerate.
pub const ORACLE_MAX_SPACE: u64 = 1 << 24;

const MAX_TABLE_Q: u64 = 256;

/// `F_q` for a prime power `q ≤ 256`, with full addition and multiplication
/// tables.
///
/// Element `x` encodes the polynomial whose base-`p` digits are the
/// coefficients of `1, X, X², ...`, reduced modulo a monic irreducible of
/// degree `k` found by search.
#[derive(Debug, Clone)]
pub struct GaloisField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power_decomposition(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_TABLE_Q {
            return Err(Error::Infeasible(format!(
                "field tables are limited to q <= {MAX_TABLE_Q}, got {q}"
            )));
        }
        let (p, k, q) = (p as usize, k as usize, q as usize);
        let digits =
            |x: usize| -> Vec<usize> { (0..k).map(|i| (x / p.pow(i as u32)) % p).collect() };
        let pack = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut add = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = digits(a);
            neg[a] = pack(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>()) as u8;
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = pack(&sum) as u8;
            }
        }

        // Monic modulus X^k + Σ low[i] X^i; the table is a field iff it has no zero divisors.
        let mul = (0..q)
            .map(|low| Self::mul_table(p, k, &digits(low), &digits, &pack))
            .find(|table| (1..q).all(|a| (1..q).all(|b| table[a * q + b] != 0)))
            .ok_or_else(|| invalid(format!("no irreducible polynomial found for q={q}")))?;

        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .expect("field element invertible") as u8;
        }
        Ok(Self {
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    fn mul_table(
        p: usize,
        k: usize,
        low: &[usize],
        digits: &dyn Fn(usize) -> Vec<usize>,
        pack: &dyn Fn(&[usize]) -> usize,
    ) -> Vec<u8> {
        let q = p.pow(k as u32);
        let mut table = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let mut prod = vec![0usize; 2 * k - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // X^k ≡ -Σ low[i] X^i
                for d in (k..2 * k - 1).rev() {
                    let c = prod[d];
                    if c != 0 {
                        prod[d] = 0;
                        for (i, l) in low.iter().enumerate() {
                            prod[d - k + i] = (prod[d - k + i] + (p - l) * c) % p;
                        }
                    }
                }
                table[a * q + b] = pack(&prod[..k]) as u8;
            }
        }
        table
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// Rank of a row-major `rows × cols` matrix; the buffer is overwritten.
    pub fn rank(&self, mat: &mut [u8], rows: usize, cols: usize) -> usize {
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| mat[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    mat.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let scale = self.inv(mat[rank * cols + col]);
            for c in col..cols {
                mat[rank * cols + c] = self.mul(mat[rank * cols + c], scale);
            }
            for r in rank + 1..rows {
                let f = mat[r * cols + col];
                if f == 0 {
                    continue;
                }
                let nf = self.neg(f);
                for c in col..cols {
                    let delta = self.mul(nf, mat[rank * cols + c]);
                    mat[r * cols + c] = self.add(mat[r * cols + c], delta);
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

fn rank_counts(field: &GaloisField, m: usize, eta: usize, range: std::ops::Range<u64>) -> Vec<u64> {
    let q = field.order() as u64;
    let mut counts = vec![0u64; m.min(eta) + 1];
    let mut mat = vec![0u8; m * eta];
    for index in range {
        let mut x = index;
        for slot in mat.iter_mut() {
            *slot = (x % q) as u8;
            x /= q;
        }
        counts[field.rank(&mut mat, m, eta)] += 1;
    }
    counts
}

/// Rank distribution of all `m × η` matrices over `F_q`, by enumeration.
///
/// Refuses when `q^{mη}` exceeds [`ORACLE_MAX_SPACE`].
pub fn brute_force_spectrum(q: u64, m: usize, eta: usize) -> Result<WeightSpectrum> {
    if m == 0 || eta == 0 {
        return Err(invalid("block dimensions must be positive"));
    }
    let space = u32::try_from(m * eta)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .filter(|&s| s <= ORACLE_MAX_SPACE)
        .ok_or_else(|| {
            Error::Infeasible(format!(
                "enumerating {q}^({m}*{eta}) matrices exceeds the oracle limit of {ORACLE_MAX_SPACE}"
            ))
        })?;
    let field = GaloisField::new(q)?;

    #[cfg(feature = "parallel")]
    let counts = {
        use rayon::prelude::*;
        const CHUNK: u64 = 1 << 14;
        let chunks: Vec<u64> = (0..space.div_ceil(CHUNK)).collect();
        chunks
            .par_iter()
            .map(|&c| rank_counts(&field, m, eta, c * CHUNK..((c + 1) * CHUNK).min(space)))
            .reduce(
                || vec![0u64; m.min(eta) + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    };
    #[cfg(not(feature = "parallel"))]
    let counts = rank_counts(&field, m, eta, 0..space);

    WeightSpectrum::from_counts(counts.into_iter().map(BigUint::from).collect(), q as f64)
}
