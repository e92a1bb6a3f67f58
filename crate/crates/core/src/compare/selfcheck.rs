use std::fmt;

use num_bigint::BigUint;

use super::sweep::{rho_sweep, RhoSweep, SweepOptions};
use crate::entropy::{rho_of_beta, solve_beta};
use crate::error::Result;
use crate::metric::WeightSpectrum;
use crate::sumrank::{
    brute_force_spectrum, exact_sphere_sequence, gamma_q, log_concavity_check, lower_bound_chain,
    sumrank_spectrum, BinomialReading, SumRankParams, DEFAULT_GAMMA_TOL,
};
use crate::LOG_SLACK;

#[derive(Debug, Clone, PartialEq)]
pub struct SelfcheckEntry {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfcheckReport {
    pub entries: Vec<SelfcheckEntry>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

impl fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.entries {
            let status = if e.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:width$}  {}", e.name, e.detail)?;
        }
        Ok(())
    }
}

fn entry(name: &'static str, outcome: Result<(bool, String)>) -> SelfcheckEntry {
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    SelfcheckEntry {
        name,
        passed,
        detail,
    }
}

fn oracle_equivalence() -> Result<(bool, String)> {
    let mut checked = 0;
    for q in [2u64, 3, 4] {
        for m in 1..=3 {
            for eta in 1..=3 {
                if q.pow((m * eta) as u32) > 1 << 20 {
                    continue;
                }
                if sumrank_spectrum(q, m, eta)? != brute_force_spectrum(q, m, eta)? {
                    return Ok((false, format!("mismatch at q={q} m={m} eta={eta}")));
                }
                checked += 1;
            }
        }
    }
    Ok((true, format!("{checked} block shapes")))
}

fn small_sequence() -> Result<(bool, String)> {
    let seq = exact_sphere_sequence(&SumRankParams::new(2, 2, 2, 2)?)?;
    let expected: Vec<BigUint> = [1u32, 18, 93, 108, 36]
        .into_iter()
        .map(BigUint::from)
        .collect();
    Ok((
        seq.coeffs() == expected.as_slice(),
        format!("{:?}", seq.coeffs()),
    ))
}

const SANDWICH_CONFIGS: [(u64, usize, usize, usize); 4] =
    [(2, 2, 2, 8), (2, 3, 2, 10), (3, 2, 3, 4), (2, 4, 4, 6)];

fn sandwich(binomial: BinomialReading) -> Result<(bool, String)> {
    let mut rows = 0;
    for (q, m, eta, ell) in SANDWICH_CONFIGS {
        let cfg = RhoSweep {
            q,
            m,
            eta,
            ell,
            t_min: 0,
            t_max: None,
            options: SweepOptions {
                binomial,
                ..SweepOptions::default()
            },
        };
        for row in rho_sweep(&cfg)? {
            if let Some(v) = row.violations(LOG_SLACK).first() {
                return Ok((false, format!("q={q} m={m} eta={eta}: {v}")));
            }
            rows += 1;
        }
    }
    Ok((true, format!("{rows} rows")))
}

fn round_trip() -> Result<(bool, String)> {
    let spectra = [
        WeightSpectrum::hamming(2)?,
        WeightSpectrum::lee(5)?,
        sumrank_spectrum(2, 2, 2)?,
        sumrank_spectrum(2, 5, 5)?,
    ];
    let mut worst = 0.0f64;
    for s in &spectra {
        let mu = s.mu() as f64;
        for i in 0..50 {
            let rho = mu * (0.01 + 0.98 * i as f64 / 49.0);
            let model = solve_beta(s, rho)?;
            worst = worst.max((rho_of_beta(s, model.beta) - rho).abs());
        }
    }
    Ok((worst <= 1e-10, format!("max error {worst:.1e}")))
}

fn concavity() -> Result<(bool, String)> {
    for q in [2u64, 3] {
        for m in 1..=4 {
            for eta in 1..=4 {
                let report = log_concavity_check(&SumRankParams::new(q, m, eta, 3)?)?;
                if !report.passed() {
                    return Ok((false, format!("q={q} m={m} eta={eta}: {report:?}")));
                }
            }
        }
    }
    Ok((true, "q in {2,3}, m, eta <= 4, ell = 3".into()))
}

fn chain() -> Result<(bool, String)> {
    for q in [2u64, 3] {
        for m in 1..=3 {
            for eta in 1..=3 {
                let base = lower_bound_chain(q, m, eta)?;
                for ell in 1..=2 {
                    let c = base.power(ell).check(1e-9);
                    if !c.all() {
                        return Ok((false, format!("q={q} m={m} eta={eta} ell={ell}: {c:?}")));
                    }
                }
            }
        }
    }
    Ok((true, "q in {2,3}, m, eta <= 3, ell <= 2".into()))
}

fn gamma_two() -> Result<(bool, String)> {
    let g = gamma_q(2.0, DEFAULT_GAMMA_TOL)?;
    Ok(((3.46274..=3.46275).contains(&g), format!("gamma_2 = {g}")))
}

/// Runs the built-in consistency suites at small sizes.
///
/// `binomial` selects the binomial used in the closed-form `κ` bound;
/// [`BinomialReading::Literal`] is expected to fail the sandwich suite.
pub fn selfcheck(binomial: BinomialReading) -> SelfcheckReport {
    SelfcheckReport {
        entries: vec![
            entry("oracle-equivalence", oracle_equivalence()),
            entry("small-sequence", small_sequence()),
            entry("sandwich", sandwich(binomial)),
            entry("beta-round-trip", round_trip()),
            entry("log-concavity", concavity()),
            entry("lower-bound-chain", chain()),
            entry("gamma-2", gamma_two()),
        ],
    }
}
