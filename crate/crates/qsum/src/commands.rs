//! Command implementations; each returns the full text it prints.

use std::fmt::Write;
use std::str::FromStr;

use qsum_core::analysis::{ErrorRecord, EIGHT_OVER_PI2, FOUR_OVER_PI2};
use qsum_core::boolean::{BooleanFunction, Mean, Measure};
use qsum_core::closed_form::distribution;
use qsum_core::sim::{index_qubits_for, run_qs};

use crate::format::{dist_csv, error_csv, fmt_g17};
use crate::parallel;
use crate::verify::{self, Suite};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

/// Largest data register accepted by the exhaustive sweeps.
pub const MAX_SWEEP_QUBITS: u32 = 40;
/// Largest total register accepted by the gate-level simulator.
pub const MAX_SIM_QUBITS: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SettingArg {
    Worst,
    Avg,
}

impl FromStr for SettingArg {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "worst" => Ok(SettingArg::Worst),
            "avg" => Ok(SettingArg::Avg),
            _ => Err(CliError::usage(format!(
                "unknown setting `{s}` (expected worst or avg)"
            ))),
        }
    }
}

pub fn parse_measure(s: &str) -> Result<Measure> {
    match s {
        "p1" => Ok(Measure::UniformOnFunctions),
        "p2" => Ok(Measure::UniformOnMeans),
        _ => Err(CliError::usage(format!(
            "unknown measure `{s}` (expected p1 or p2)"
        ))),
    }
}

/// A probability level: a decimal number, `8/pi2` or `4/pi2`.
pub fn parse_level(s: &str) -> Result<f64> {
    let p = match s.trim() {
        "8/pi2" => EIGHT_OVER_PI2,
        "4/pi2" => FOUR_OVER_PI2,
        t => t
            .parse::<f64>()
            .map_err(|_| CliError::usage(format!("cannot parse level `{s}`")))?,
    };
    if p > 0.0 && p <= 1.0 {
        Ok(p)
    } else {
        Err(CliError::usage(format!("level {s} is outside (0, 1]")))
    }
}

/// Comma-separated levels.
pub fn parse_levels(s: &str) -> Result<Vec<f64>> {
    s.split(',').map(parse_level).collect()
}

fn parse_u64(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| CliError::usage(format!("cannot parse integer `{s}`")))
}

/// Values of `M`: `a,b,c`, `a..b` (step 1), `a..b+s` (step `s`) or `a..b*r`
/// (geometric, ratio `r`). Ranges include both ends.
pub fn parse_m_list(s: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let Some((lo, rest)) = part.split_once("..") else {
            out.push(parse_u64(part)?);
            continue;
        };
        let lo = parse_u64(lo)?;
        let (hi, step, geometric) = if let Some((hi, r)) = rest.split_once('*') {
            (parse_u64(hi)?, parse_u64(r)?, true)
        } else if let Some((hi, d)) = rest.split_once('+') {
            (parse_u64(hi)?, parse_u64(d)?, false)
        } else {
            (parse_u64(rest)?, 1, false)
        };
        if lo == 0 || hi < lo || (geometric && step < 2) || step == 0 {
            return Err(CliError::usage(format!("invalid range `{part}`")));
        }
        let mut x = Some(lo);
        while let Some(v) = x.filter(|&v| v <= hi) {
            out.push(v);
            x = if geometric {
                v.checked_mul(step)
            } else {
                v.checked_add(step)
            };
        }
    }
    if out.contains(&0) {
        return Err(CliError::usage("M must be positive"));
    }
    Ok(out)
}

fn points(n: u32, limit: u32) -> Result<u64> {
    if n > limit {
        return Err(CliError::usage(format!(
            "n = {n} exceeds the supported maximum {limit}"
        )));
    }
    Ok(1u64 << n)
}

pub fn cmd_dist(m: u64, n: u32, k: u64) -> Result<String> {
    let n_points = points(n, 63)?;
    if k > n_points {
        return Err(CliError::usage(format!("k = {k} exceeds 2^n = {n_points}")));
    }
    if m == 0 || m > 1 << 24 {
        return Err(CliError::usage("M must lie in 1..=2^24"));
    }
    Ok(dist_csv(&distribution(Mean::new(k, n_points)?, m)?))
}

pub fn cmd_simulate(m: u64, n: u32, table: &str, seed: u64) -> Result<String> {
    if m == 0 {
        return Err(CliError::usage("M must be positive"));
    }
    if n + index_qubits_for(m) > MAX_SIM_QUBITS {
        return Err(CliError::usage(format!(
            "n + ceil(log2 M) exceeds {MAX_SIM_QUBITS} qubits"
        )));
    }
    let f = BooleanFunction::parse_table(n, table)?;
    let run = run_qs(&f, m, Some(seed))?;
    let rec = run.measurement.expect("seeded run measures");
    let mut out = String::new();
    writeln!(out, "outcome: {}", rec.outcome).unwrap();
    writeln!(
        out,
        "output: {}",
        fmt_g17(run.output.expect("seeded run has output"))
    )
    .unwrap();
    writeln!(out, "probability: {}", fmt_g17(rec.probability)).unwrap();
    writeln!(out, "queries: {}", run.query_count).unwrap();
    writeln!(out, "qubits: {}", run.qubit_count).unwrap();
    Ok(out)
}

fn sweep(
    setting: SettingArg,
    m: u64,
    n: u32,
    p: f64,
    measure: Measure,
    beta: f64,
) -> Result<ErrorRecord> {
    let n_points = points(n, MAX_SWEEP_QUBITS)?;
    Ok(match setting {
        SettingArg::Worst => parallel::worst_probabilistic_error(m, n_points, p)?,
        SettingArg::Avg => parallel::avg_probabilistic_error(m, n_points, p, measure, beta)?,
    })
}

pub fn cmd_error(
    setting: SettingArg,
    m: u64,
    n: u32,
    p: f64,
    measure: Measure,
    beta: f64,
) -> Result<String> {
    let r = sweep(setting, m, n, p, measure, beta)?;
    Ok(error_csv([&r]))
}

/// One row per `(M, p)`, `M` varying slowest.
pub fn cmd_curve(
    setting: SettingArg,
    ms: &[u64],
    n: u32,
    ps: &[f64],
    measure: Measure,
    beta: f64,
) -> Result<String> {
    let mut records = Vec::with_capacity(ms.len() * ps.len());
    for &m in ms {
        for &p in ps {
            records.push(sweep(setting, m, n, p, measure, beta)?);
        }
    }
    Ok(error_csv(&records))
}

/// Report text and overall success.
pub fn cmd_verify(suite: &str) -> Result<(String, bool)> {
    let suite: Suite = suite.parse()?;
    let checks = verify::run_suite(suite);
    let ok = checks.iter().all(|c| c.passed);
    Ok((verify::render(&checks), ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_lists() {
        assert_eq!(parse_m_list("4..64*2").unwrap(), vec![4, 8, 16, 32, 64]);
        assert_eq!(parse_m_list("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_m_list("2..9+3").unwrap(), vec![2, 5, 8]);
        assert_eq!(parse_m_list("5,6,7,18").unwrap(), vec![5, 6, 7, 18]);
        assert_eq!(parse_m_list("3,8..16*2").unwrap(), vec![3, 8, 16]);
        for bad in ["0", "8..4", "4..8*1", "x", "4..8+0", "0..4"] {
            assert!(parse_m_list(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn levels() {
        assert_eq!(parse_level("8/pi2").unwrap(), EIGHT_OVER_PI2);
        assert_eq!(parse_level("4/pi2").unwrap(), FOUR_OVER_PI2);
        assert_eq!(parse_level("0.75").unwrap(), 0.75);
        assert!(parse_level("0").is_err());
        assert!(parse_level("1.2").is_err());
        assert_eq!(
            parse_levels("0.51,8/pi2").unwrap(),
            vec![0.51, EIGHT_OVER_PI2]
        );
    }

    #[test]
    fn dist_rows() {
        let out = cmd_dist(4, 2, 0).unwrap();
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows[0], "j,prob,abar");
        assert_eq!(rows[1], "0,1,0");
        assert_eq!(rows.len(), 5);
        assert!(cmd_dist(4, 2, 5).is_err());
    }
}
