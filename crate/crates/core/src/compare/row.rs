use std::fmt;

/// One point of a comparison table; every value is `(1/ℓ) log_q` of a
/// sphere size or of a bound on it. `None` means not applicable.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub ell: usize,
    pub eta: usize,
    pub t: usize,
    pub rho: f64,
    pub exact_logq_norm: Option<f64>,
    pub ub_entropy: Option<f64>,
    pub lb_entropy_max: Option<f64>,
    pub ub_kappa_closed: Option<f64>,
    pub ub_integral_gamma: Option<f64>,
    pub ub_integral_kappa: Option<f64>,
    pub lb_closed: Option<f64>,
    pub lb_closed_env: Option<f64>,
    /// Largest exact normalized log over the entropy window around `t`;
    /// the quantity `lb_entropy_max` actually bounds. Not written to CSV.
    pub window_max: Option<f64>,
}

/// A failed `lower ≤ upper` comparison in a row.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub ell: usize,
    pub t: usize,
    pub lower: &'static str,
    pub upper: &'static str,
    pub lower_value: f64,
    pub upper_value: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ell={} t={}: {} = {} exceeds {} = {}",
            self.ell, self.t, self.lower, self.lower_value, self.upper, self.upper_value
        )
    }
}

impl ComparisonRow {
    pub(crate) fn empty(ell: usize, eta: usize, t: usize) -> Self {
        Self {
            ell,
            eta,
            t,
            rho: t as f64 / ell as f64,
            exact_logq_norm: None,
            ub_entropy: None,
            lb_entropy_max: None,
            ub_kappa_closed: None,
            ub_integral_gamma: None,
            ub_integral_kappa: None,
            lb_closed: None,
            lb_closed_env: None,
            window_max: None,
        }
    }

    /// The CSV cells after the four key columns, in header order.
    pub fn value_columns(&self) -> [(&'static str, Option<f64>); 8] {
        [
            ("exact_logq_norm", self.exact_logq_norm),
            ("ub_entropy", self.ub_entropy),
            ("lb_entropy_max", self.lb_entropy_max),
            ("ub_kappa_closed", self.ub_kappa_closed),
            ("ub_integral_gamma", self.ub_integral_gamma),
            ("ub_integral_kappa", self.ub_integral_kappa),
            ("lb_closed", self.lb_closed),
            ("lb_closed_env", self.lb_closed_env),
        ]
    }

    /// Every `lower ≤ upper + slack` relation that fails.
    ///
    /// Checked: closed-form lower bounds ≤ exact ≤ each upper bound,
    /// `lb_closed ≤ lb_closed_env`, and `lb_entropy_max ≤ window_max`.
    pub fn violations(&self, slack: f64) -> Vec<Violation> {
        let mut pairs: Vec<(&'static str, Option<f64>, &'static str, Option<f64>)> = vec![
            (
                "lb_closed",
                self.lb_closed,
                "lb_closed_env",
                self.lb_closed_env,
            ),
            (
                "lb_entropy_max",
                self.lb_entropy_max,
                "window_max",
                self.window_max,
            ),
        ];
        for (name, lower) in [
            ("lb_closed", self.lb_closed),
            ("lb_closed_env", self.lb_closed_env),
        ] {
            pairs.push((name, lower, "exact_logq_norm", self.exact_logq_norm));
        }
        for (name, upper) in [
            ("ub_entropy", self.ub_entropy),
            ("ub_kappa_closed", self.ub_kappa_closed),
            ("ub_integral_gamma", self.ub_integral_gamma),
            ("ub_integral_kappa", self.ub_integral_kappa),
        ] {
            pairs.push(("exact_logq_norm", self.exact_logq_norm, name, upper));
        }
        pairs
            .into_iter()
            .filter_map(|(lower, lv, upper, uv)| match (lv, uv) {
                (Some(l), Some(u)) if l > u + slack => Some(Violation {
                    ell: self.ell,
                    t: self.t,
                    lower,
                    upper,
                    lower_value: l,
                    upper_value: u,
                }),
                _ => None,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn violation_detection() {
        let mut row = ComparisonRow::empty(2, 2, 1);
        assert!(row.violations(1e-9).is_empty());
        row.exact_logq_norm = Some(2.0);
        row.ub_kappa_closed = Some(2.0 - 1e-10);
        row.lb_closed = Some(1.0);
        assert!(row.violations(1e-9).is_empty());
        row.ub_integral_gamma = Some(1.5);
        row.lb_entropy_max = Some(3.0);
        row.window_max = Some(2.5);
        let v = row.violations(1e-9);
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].lower, "lb_entropy_max");
        assert_eq!(v[1].upper, "ub_integral_gamma");
        assert!(v[1].to_string().contains("ell=2 t=1"));
    }
}
