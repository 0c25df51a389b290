//! Multithreaded worst and average sweeps over `k = 0..=N`.
//!
//! Class errors are computed in parallel and collected in `k` order, then
//! combined serially, so the result is bit-identical to the serial drivers.

use qsum_core::analysis::{avg_record, class_error, worst_record, ErrorRecord};
use qsum_core::boolean::Measure;
use qsum_core::{CompensatedSum, Result};
use rayon::prelude::*;

pub fn worst_probabilistic_error(m: u64, n_points: u64, p: f64) -> Result<ErrorRecord> {
    worst_record(m, n_points, p, 0.0)?;
    let errors = (0..=n_points)
        .into_par_iter()
        .map(|k| class_error(k, n_points, m, p))
        .collect::<Result<Vec<f64>>>()?;
    let value = errors.into_iter().fold(0.0, f64::max);
    worst_record(m, n_points, p, value)
}

pub fn avg_probabilistic_error(
    m: u64,
    n_points: u64,
    p: f64,
    measure: Measure,
    beta: f64,
) -> Result<ErrorRecord> {
    avg_record(m, n_points, p, measure, beta, 0.0)?;
    let terms = (0..=n_points)
        .into_par_iter()
        .map(|k| {
            let weight = measure.class_weight(k, n_points)?;
            if weight > 0.0 {
                Ok(weight * class_error(k, n_points, m, p)?)
            } else {
                Ok(0.0)
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    let value: CompensatedSum = terms.into_iter().collect();
    avg_record(m, n_points, p, measure, beta, value.value())
}
