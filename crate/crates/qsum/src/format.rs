//! Locale-free number formatting and CSV rows.

use std::fmt::Write;

use qsum_core::analysis::ErrorRecord;
use qsum_core::closed_form::OutcomeDistribution;

pub const DIST_HEADER: &str = "j,prob,abar";
pub const ERROR_HEADER: &str = "M,N,p,setting,measure,value,bound,bound_ref";

/// Shortest `%.17g` rendering: 17 significant digits, trailing zeros dropped,
/// exponent form outside `1e-4 ≤ |x| < 1e17`.
pub fn fmt_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    if !(-4..17).contains(&exp) {
        let frac = digits[1..].trim_end_matches('0');
        let dot = if frac.is_empty() { "" } else { "." };
        let esign = if exp < 0 { '-' } else { '+' };
        return format!("{sign}{}{dot}{frac}e{esign}{:02}", &digits[..1], exp.abs());
    }
    let body = if exp >= 0 {
        let split = exp as usize + 1;
        format!("{}.{}", &digits[..split], &digits[split..])
    } else {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    };
    let body = body.trim_end_matches('0').trim_end_matches('.');
    format!("{sign}{body}")
}

pub fn dist_csv(dist: &OutcomeDistribution) -> String {
    let mut out = String::from(DIST_HEADER);
    out.push('\n');
    for (j, (p, abar)) in dist.probs().iter().zip(dist.outputs()).enumerate() {
        writeln!(out, "{j},{},{}", fmt_g17(*p), fmt_g17(*abar)).unwrap();
    }
    out
}

pub fn error_row(r: &ErrorRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.m,
        r.n_points,
        fmt_g17(r.p),
        r.setting,
        r.measure.map_or("", |m| m.as_str()),
        fmt_g17(r.value),
        r.bound.map_or_else(String::new, fmt_g17),
        r.bound_ref.map_or("", |b| b.tag()),
    )
}

pub fn error_csv<'a>(records: impl IntoIterator<Item = &'a ErrorRecord>) -> String {
    let mut out = String::from(ERROR_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&error_row(r));
        out.push('\n');
    }
    out
}
