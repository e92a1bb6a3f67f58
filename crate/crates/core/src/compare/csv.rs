use std::io::{self, Write};

use super::row::ComparisonRow;

pub const CSV_HEADER: &str = "ell,eta,t,rho,exact_logq_norm,ub_entropy,lb_entropy_max,\
ub_kappa_closed,ub_integral_gamma,ub_integral_kappa,lb_closed,lb_closed_env";

const SIGNIFICANT: i32 = 12;

/// 12 significant digits, positional notation below `10^6`, trailing zeros
/// trimmed.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() >= 1e6 {
        return format!("{:.*e}", (SIGNIFICANT - 1) as usize, x);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (SIGNIFICANT - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn cell(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[ComparisonRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        let mut line = format!(
            "{},{},{},{}",
            row.ell,
            row.eta,
            row.t,
            format_float(row.rho)
        );
        for (_, v) in row.value_columns() {
            line.push(',');
            line.push_str(&cell(v));
        }
        writeln!(out, "{line}")?;
    }
    out.flush()
}
