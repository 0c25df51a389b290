//! Boolean functions on `{0, …, N-1}`, their exact means and the measures on
//! the set of all such functions.
//!
//! Every quantity downstream depends on a function only through its mean
//! `a = k/N`, so sweeps enumerate `k` and [`BooleanFunction::from_mean`]
//! supplies a canonical representative when a concrete table is needed.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::binomial::half_binomial_pmf;
use crate::{CompensatedSum, Error, Result};

/// `σ` values closer than this to an integer are treated as integral.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-9;

/// A Boolean function `f: {0, …, 2ⁿ-1} → {0, 1}` stored as its value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    qubits: u32,
    values: Vec<bool>,
}

impl BooleanFunction {
    pub fn new(qubits: u32, values: Vec<bool>) -> Result<Self> {
        let expected = domain_len(qubits);
        if values.len() != expected {
            return Err(Error::TableLength {
                expected,
                got: values.len(),
            });
        }
        Ok(Self { qubits, values })
    }

    pub fn from_fn(qubits: u32, f: impl FnMut(usize) -> bool) -> Self {
        let values = (0..domain_len(qubits)).map(f).collect();
        Self { qubits, values }
    }

    /// Canonical function with mean `k/2ⁿ`: the first `k` points map to one.
    pub fn from_mean(qubits: u32, k: u64) -> Result<Self> {
        let n = domain_len(qubits) as u64;
        if k > n {
            return Err(Error::ClassOutOfRange { k, n });
        }
        Ok(Self::from_fn(qubits, |i| (i as u64) < k))
    }

    pub fn zero(qubits: u32) -> Self {
        Self::from_fn(qubits, |_| false)
    }

    pub fn one(qubits: u32) -> Self {
        Self::from_fn(qubits, |_| true)
    }

    pub fn qubits(&self) -> u32 {
        self.qubits
    }

    /// `N = 2ⁿ`.
    pub fn domain_size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn eval(&self, i: usize) -> bool {
        self.values[i]
    }

    pub fn count_ones(&self) -> u64 {
        self.values.iter().filter(|&&v| v).count() as u64
    }

    pub fn mean(&self) -> Mean {
        Mean {
            k: self.count_ones(),
            n: self.values.len() as u64,
        }
    }

    /// Parses the textual table: lowercase hex, most significant nibble
    /// first, `N/4` digits for `N ≥ 4`; one `0`/`1` digit per point below
    /// that. Within a nibble the most significant bit is the lowest point.
    pub fn parse_table(qubits: u32, text: &str) -> Result<Self> {
        let n = domain_len(qubits);
        let text = text.trim();
        let text = text
            .strip_prefix("0x")
            .or_else(|| text.strip_prefix("0X"))
            .unwrap_or(text);
        let mut values = Vec::with_capacity(n);
        if n < 4 {
            for c in text.chars() {
                match c {
                    '0' => values.push(false),
                    '1' => values.push(true),
                    other => return Err(Error::MalformedTable(other)),
                }
            }
        } else {
            for c in text.chars() {
                let nibble = c.to_digit(16).ok_or(Error::MalformedTable(c))?;
                values.extend((0..4).rev().map(|b| nibble >> b & 1 == 1));
            }
        }
        Self::new(qubits, values)
    }

    pub fn to_table_string(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        if self.values.len() < 4 {
            for &v in &self.values {
                out.push(if v { '1' } else { '0' });
            }
        } else {
            for chunk in self.values.chunks(4) {
                let nibble = chunk.iter().fold(0u32, |acc, &v| acc << 1 | u32::from(v));
                let _ = write!(out, "{nibble:x}");
            }
        }
        out
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table_string())
    }
}

fn domain_len(qubits: u32) -> usize {
    1usize << qubits
}

/// Exact rational mean `k/N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mean {
    k: u64,
    n: u64,
}

impl Mean {
    pub fn new(k: u64, n: u64) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::ClassOutOfRange { k, n });
        }
        Ok(Self { k, n })
    }

    pub fn zero() -> Self {
        Self { k: 0, n: 1 }
    }

    pub fn one() -> Self {
        Self { k: 1, n: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.k
    }

    pub fn denominator(&self) -> u64 {
        self.n
    }

    pub fn value(&self) -> f64 {
        self.k as f64 / self.n as f64
    }
}

impl fmt::Display for Mean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.n)
    }
}

/// `a_f = (1/N) Σ f(i)`.
pub fn mean(f: &BooleanFunction) -> Mean {
    f.mean()
}

/// The ideal outcome `σ = (M/π) arcsin √a` and the rotation angle
/// `θ = arcsin √a` for a mean `a` and `M` outcomes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaValue {
    sigma: f64,
    theta: f64,
    a: f64,
    m: u64,
}

impl SigmaValue {
    /// Accepts any real `a ∈ [0, 1]`.
    pub fn from_real(a: f64, m: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::MeanOutOfRange(a));
        }
        if m == 0 {
            return Err(Error::ZeroOutcomes);
        }
        let theta = libm::asin(libm::sqrt(a));
        Ok(Self {
            sigma: m as f64 * theta / PI,
            theta,
            a,
            m,
        })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn is_integral(&self) -> bool {
        libm::fabs(self.sigma - libm::round(self.sigma)) < INTEGRALITY_TOLERANCE
    }

    pub fn floor(&self) -> u64 {
        libm::floor(self.sigma) as u64
    }

    pub fn ceil(&self) -> u64 {
        libm::ceil(self.sigma) as u64
    }
}

pub fn sigma_of(a: Mean, m: u64) -> Result<SigmaValue> {
    SigmaValue::from_real(a.value(), m)
}

/// Probability measures on the set of Boolean functions with `N` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Every function has weight `2^{-N}`.
    UniformOnFunctions,
    /// Every attainable mean `k/N` has weight `1/(N+1)`, spread uniformly
    /// over the functions with that mean.
    UniformOnMeans,
}

impl Measure {
    /// Total weight of the class `{f : a_f = k/N}`.
    pub fn class_weight(self, k: u64, n: u64) -> Result<f64> {
        if k > n {
            return Err(Error::ClassOutOfRange { k, n });
        }
        Ok(match self {
            Measure::UniformOnFunctions => half_binomial_pmf(n, k),
            Measure::UniformOnMeans => 1.0 / (n as f64 + 1.0),
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::UniformOnFunctions => "p1",
            Measure::UniformOnMeans => "p2",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn class_weight(measure: Measure, k: u64, n: u64) -> Result<f64> {
    measure.class_weight(k, n)
}

/// First central moment `Σ_k w(k) |1/2 - k/N|` of the mean under `measure`,
/// which is also the error of the query-free algorithm that outputs `1/2`.
///
/// For the uniform measure on functions the binomial sum collapses to a
/// single central coefficient.
pub fn first_moment(measure: Measure, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ClassOutOfRange { k: 0, n });
    }
    Ok(match measure {
        // 2^{-N} C(N-1, (N-1)/2) resp. 2^{-(N+1)} C(N, N/2).
        Measure::UniformOnFunctions if n % 2 == 1 => 0.5 * half_binomial_pmf(n - 1, (n - 1) / 2),
        Measure::UniformOnFunctions => 0.5 * half_binomial_pmf(n, n / 2),
        Measure::UniformOnMeans => first_moment_by_summation(measure, n)?,
    })
}

/// The defining sum of [`first_moment`], term by term.
pub fn first_moment_by_summation(measure: Measure, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ClassOutOfRange { k: 0, n });
    }
    let nf = n as f64;
    let mut sum = CompensatedSum::new();
    for k in 0..=n {
        sum.add(measure.class_weight(k, n)? * libm::fabs(0.5 - k as f64 / nf));
    }
    Ok(sum.value())
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use alloc::vec;

    fn table(bits: &str) -> Vec<bool> {
        bits.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn means_of_simple_functions() {
        assert_eq!(BooleanFunction::zero(3).mean().value(), 0.0);
        assert_eq!(BooleanFunction::one(2).mean().value(), 1.0);
        let f = BooleanFunction::new(3, table("10110000")).unwrap();
        assert_eq!(mean(&f), Mean::new(3, 8).unwrap());
    }

    #[test]
    fn table_length_is_checked() {
        assert_eq!(
            BooleanFunction::new(2, vec![true; 3]),
            Err(Error::TableLength {
                expected: 4,
                got: 3
            })
        );
    }

    #[test]
    fn from_mean_sets_prefix() {
        let f = BooleanFunction::from_mean(3, 3).unwrap();
        assert_eq!(f.values(), &table("11100000")[..]);
        assert!(BooleanFunction::from_mean(2, 5).is_err());
    }

    #[test]
    fn table_string_format() {
        let f = BooleanFunction::new(3, table("10110000")).unwrap();
        assert_eq!(f.to_table_string(), "b0");
        assert_eq!(BooleanFunction::parse_table(3, "b0").unwrap(), f);
        assert_eq!(BooleanFunction::parse_table(3, "B0").unwrap(), f);
        assert_eq!(
            BooleanFunction::parse_table(3, "0x0f")
                .unwrap()
                .count_ones(),
            4
        );
        let g = BooleanFunction::new(1, table("01")).unwrap();
        assert_eq!(g.to_table_string(), "01");
        assert_eq!(BooleanFunction::parse_table(1, "01").unwrap(), g);
        assert_eq!(
            BooleanFunction::parse_table(0, "1").unwrap().count_ones(),
            1
        );
        assert_eq!(
            BooleanFunction::parse_table(3, "g0"),
            Err(Error::MalformedTable('g'))
        );
        assert_eq!(
            BooleanFunction::parse_table(1, "2"),
            Err(Error::MalformedTable('2'))
        );
        assert!(matches!(
            BooleanFunction::parse_table(3, "b00"),
            Err(Error::TableLength {
                expected: 8,
                got: 12
            })
        ));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_of(Mean::zero(), 8).unwrap().sigma(), 0.0);
        let s = sigma_of(Mean::new(1, 2).unwrap(), 8).unwrap();
        assert!((s.sigma() - 2.0).abs() < 1e-14);
        assert!(s.is_integral());
        let s = sigma_of(Mean::new(3, 4).unwrap(), 12).unwrap();
        assert!((s.sigma() - 4.0).abs() < 1e-14);
        assert!((s.theta() - PI / 3.0).abs() < 1e-15);
        assert!(SigmaValue::from_real(1.5, 4).is_err());
        assert!(SigmaValue::from_real(-0.1, 4).is_err());
        assert!(SigmaValue::from_real(0.5, 0).is_err());
    }

    #[test]
    fn class_weight_examples() {
        assert_eq!(
            class_weight(Measure::UniformOnFunctions, 0, 4).unwrap(),
            1.0 / 16.0
        );
        for k in 0..=4 {
            assert_eq!(class_weight(Measure::UniformOnMeans, k, 4).unwrap(), 0.2);
        }
        assert!(class_weight(Measure::UniformOnMeans, 5, 4).is_err());
    }

    #[test]
    fn first_moment_examples() {
        let p1 = Measure::UniformOnFunctions;
        assert!((first_moment(p1, 3).unwrap() - 0.25).abs() < 1e-16);
        assert!((first_moment(p1, 2).unwrap() - 0.25).abs() < 1e-16);
        assert!((first_moment(p1, 1).unwrap() - 0.5).abs() < 1e-16);
        let p2 = Measure::UniformOnMeans;
        assert!((first_moment(p2, 2).unwrap() - 1.0 / 3.0).abs() < 1e-16);
    }
}
