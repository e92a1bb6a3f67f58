use crate::error::{invalid, Error, Result};

/// Sum-rank parameters: field size `q`, block shape `m × η`, and `ℓ` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumRankParams {
    q: u64,
    m: usize,
    eta: usize,
    ell: usize,
}

impl SumRankParams {
    pub fn new(q: u64, m: usize, eta: usize, ell: usize) -> Result<Self> {
        if q < 2 {
            return Err(invalid(format!("q must be at least 2, got {q}")));
        }
        if !is_prime_power(q) {
            return Err(Error::NotPrimePower(q));
        }
        if m == 0 || eta == 0 || ell == 0 {
            return Err(invalid(format!(
                "m, eta, ell must be positive (got m={m}, eta={eta}, ell={ell})"
            )));
        }
        Ok(Self { q, m, eta, ell })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn eta(&self) -> usize {
        self.eta
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `min(m, η)`, the largest block rank.
    pub fn mu(&self) -> usize {
        self.m.min(self.eta)
    }

    /// `max(m, η)`.
    pub fn big_m(&self) -> usize {
        self.m.max(self.eta)
    }

    /// Code length `η·ℓ`.
    pub fn n(&self) -> usize {
        self.eta * self.ell
    }

    /// Largest sphere radius `μ·ℓ`.
    pub fn max_radius(&self) -> usize {
        self.mu() * self.ell
    }

    pub(crate) fn check_radius(&self, t: usize) -> Result<()> {
        if t > self.max_radius() {
            Err(Error::RadiusOutOfRange {
                t,
                max: self.max_radius(),
            })
        } else {
            Ok(())
        }
    }
}

/// `Some((p, k))` with `q = p^k` for prime `p`, `None` otherwise.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..)
        .take_while(|d: &u64| d.saturating_mul(*d) <= q)
        .find(|d| q.is_multiple_of(*d))
        .unwrap_or(q);
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power_decomposition(q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let p = SumRankParams::new(2, 5, 3, 4).unwrap();
        assert_eq!((p.mu(), p.big_m(), p.n(), p.max_radius()), (3, 5, 12, 12));
    }

    #[test]
    fn rejects_bad_params() {
        assert_eq!(SumRankParams::new(6, 2, 2, 2), Err(Error::NotPrimePower(6)));
        assert!(matches!(
            SumRankParams::new(1, 2, 2, 2),
            Err(Error::InvalidParameter(_))
        ));
        assert!(SumRankParams::new(2, 0, 2, 2).is_err());
        assert!(SumRankParams::new(2, 2, 2, 0).is_err());
    }

    #[test]
    fn prime_powers() {
        let expect = |q| prime_power_decomposition(q);
        assert_eq!(expect(2), Some((2, 1)));
        assert_eq!(expect(4), Some((2, 2)));
        assert_eq!(expect(9), Some((3, 2)));
        assert_eq!(expect(1024), Some((2, 10)));
        assert_eq!(expect(7), Some((7, 1)));
        assert_eq!(expect(49), Some((7, 2)));
        assert_eq!(expect(1_000_003), Some((1_000_003, 1)));
        for bad in [0, 1, 6, 10, 12, 15, 36, 100] {
            assert_eq!(expect(bad), None, "q={bad}");
        }
    }
}
