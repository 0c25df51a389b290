//! Named verification suites behind `qsum verify`.

use std::f64::consts::PI;
use std::fmt::Write;
use std::str::FromStr;

use qsum_core::analysis::{
    self, c_bound, g, h, linear_estimate, queries_for_epsilon, rounding_resolution,
    rounding_success_probability, v, v_inverse, wa4_upper_bound, wan4_lower_bound, EIGHT_OVER_PI2,
    FOUR_OVER_PI2,
};
use qsum_core::boolean::{first_moment, first_moment_by_summation, BooleanFunction, Mean, Measure};
use qsum_core::closed_form::{distribution, distribution_real, kernel};
use qsum_core::sim::{
    apply_grover, apply_lambda, apply_primitive, grover_spectrum, index_qubits_for, run_qs,
    Complex64, GroverSpectrum, Primitive, QubitLayout, StateVector,
};
use qsum_core::{seeded_rng, SeededRng};
use rand::Rng;

use crate::parallel;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Unitarity,
    OracleEquivalence,
    Bounds,
    Calculus,
    AverageCase,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "unitarity" => Suite::Unitarity,
            "oracle-equivalence" => Suite::OracleEquivalence,
            "bounds" => Suite::Bounds,
            "calculus" => Suite::Calculus,
            "average-case" => Suite::AverageCase,
            "all" => Suite::All,
            _ => return Err(CliError::usage(format!("unknown suite `{s}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Unitarity => unitarity(),
        Suite::OracleEquivalence => oracle_equivalence(),
        Suite::Bounds => bounds(),
        Suite::Calculus => calculus(),
        Suite::AverageCase => average_case(),
        Suite::All => [
            unitarity(),
            oracle_equivalence(),
            bounds(),
            calculus(),
            average_case(),
        ]
        .concat(),
    }
}

pub fn render(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status}  {:width$}  {}", c.name, c.detail).unwrap();
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} checks, {failed} failed", checks.len()).unwrap();
    out
}

fn random_state(layout: QubitLayout, rng: &mut SeededRng) -> StateVector {
    let mut amps: Vec<_> = (0..layout.dim())
        .map(|_| num_complex(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|z| *z /= norm);
    StateVector::from_amplitudes(layout, amps).expect("dimension matches")
}

fn num_complex(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_function(qubits: u32, rng: &mut SeededRng) -> BooleanFunction {
    BooleanFunction::from_fn(qubits, |_| rng.random::<bool>())
}

fn unitarity() -> Vec<Check> {
    let mut rng = seeded_rng(11);
    let mut drift: f64 = 0.0;
    for n in 1..=4u32 {
        for m in 1..=9u64 {
            let layout = QubitLayout::new(n, m).expect("valid layout");
            let f = random_function(n, &mut rng);
            let mut s = random_state(layout, &mut rng);
            for op in [
                Primitive::S0,
                Primitive::WalshHadamard,
                Primitive::Qft,
                Primitive::QftInverse,
            ] {
                apply_primitive(&mut s, op, None).expect("primitive applies");
                drift = drift.max((s.norm_sqr() - 1.0).abs());
            }
            apply_primitive(&mut s, Primitive::Query, Some(&f)).expect("query applies");
            apply_grover(&mut s, &f).expect("grover applies");
            apply_lambda(&mut s, &f).expect("lambda applies");
            drift = drift.max((s.norm_sqr() - 1.0).abs());
        }
    }
    let mut final_drift: f64 = 0.0;
    for n in 1..=5u32 {
        for m in 1..=16u64 {
            let f = random_function(n, &mut rng);
            let run = run_qs(&f, m, None).expect("run succeeds");
            final_drift = final_drift.max((run.state.norm_sqr() - 1.0).abs());
        }
    }
    vec![
        check(
            "operator norm drift",
            drift <= 1e-10,
            format!("max {drift:.3e} <= 1e-10"),
        ),
        check(
            "algorithm norm drift",
            final_drift <= 1e-10,
            format!("max {final_drift:.3e} <= 1e-10"),
        ),
    ]
}

fn oracle_equivalence() -> Vec<Check> {
    let mut rng = seeded_rng(12);
    let mut dev: f64 = 0.0;
    let mut tail: f64 = 0.0;
    let mut counts_ok = true;
    for n in 1..=6u32 {
        let n_points = 1u64 << n;
        for m in 1..=16u64 {
            for k in 0..=n_points {
                let mut values: Vec<bool> = (0..n_points).map(|i| i < k).collect();
                for i in (1..values.len()).rev() {
                    values.swap(i, rng.random_range(0..=i));
                }
                let f = BooleanFunction::new(n, values).expect("table length");
                let run = run_qs(&f, m, None).expect("run succeeds");
                let law = distribution(Mean::new(k, n_points).expect("k <= N"), m).expect("M >= 1");
                for (j, p) in run.distribution.iter().enumerate() {
                    match law.probs().get(j) {
                        Some(q) => dev = dev.max((p - q).abs()),
                        None => tail = tail.max(*p),
                    }
                }
                counts_ok &= run.query_count == m - 1 && run.qubit_count == n + index_qubits_for(m);
            }
        }
    }
    let mut spec_dev: f64 = 0.0;
    let mut repr_dev: f64 = 0.0;
    for n in 1..=4u32 {
        let n_points = 1u64 << n;
        for k in 0..=n_points {
            let f = BooleanFunction::from_mean(n, k).expect("k <= N");
            let spectrum = grover_spectrum(f.mean());
            let (psi0, psi1) = GroverSpectrum::invariant_basis(&f);
            let matrix = spectrum.subspace_matrix();
            for (col, basis) in [&psi0, &psi1].into_iter().enumerate() {
                if basis.norm_sqr() == 0.0 {
                    continue;
                }
                let mut image = basis.clone();
                apply_grover(&mut image, &f).expect("grover applies");
                // Coordinates with respect to the unnormalised |ψ₀⟩, |ψ₁⟩.
                for (row, target) in [&psi0, &psi1].into_iter().enumerate() {
                    let nt = target.norm_sqr();
                    if nt > 0.0 {
                        let coord = target.inner(&image).re / nt;
                        spec_dev = spec_dev.max((coord - matrix[row][col]).abs());
                    }
                }
            }
            let (plus, minus) = spectrum.eigenvectors(&f).expect("same mean");
            let layout = QubitLayout::data_only(n);
            let mut psi = StateVector::zero(layout);
            apply_primitive(&mut psi, Primitive::WalshHadamard, None).expect("primitive applies");
            let theta = spectrum.theta();
            let pref = num_complex(0.0, -1.0 / std::f64::consts::SQRT_2);
            let e = num_complex(theta.cos(), theta.sin());
            for ((x, p), q) in psi
                .amplitudes()
                .iter()
                .zip(plus.amplitudes())
                .zip(minus.amplitudes())
            {
                let rebuilt = pref * (e * p - e.conj() * q);
                repr_dev = repr_dev.max((rebuilt - x).norm());
            }
            for (vec, lambda) in [
                (&plus, spectrum.lambda_plus()),
                (&minus, spectrum.lambda_minus()),
            ] {
                let mut img = vec.clone();
                apply_grover(&mut img, &f).expect("grover applies");
                for (y, x) in img.amplitudes().iter().zip(vec.amplitudes()) {
                    repr_dev = repr_dev.max((y - lambda * x).norm());
                }
            }
        }
    }
    vec![
        check(
            "gate marginals vs closed form",
            dev <= 1e-9,
            format!("max {dev:.3e} <= 1e-9"),
        ),
        check(
            "mass outside 0..M",
            tail <= 1e-12,
            format!("max {tail:.3e} <= 1e-12"),
        ),
        check(
            "query and qubit counts",
            counts_ok,
            "M-1 and n+ceil(log2 M)".into(),
        ),
        check(
            "invariant-plane matrix",
            spec_dev <= 1e-12,
            format!("max {spec_dev:.3e} <= 1e-12"),
        ),
        check(
            "eigen-decomposition of W|0>",
            repr_dev <= 1e-10,
            format!("max {repr_dev:.3e} <= 1e-10"),
        ),
    ]
}

fn bounds() -> Vec<Check> {
    let mut out = Vec::new();
    let n = 1u64 << 12;
    let mut worst_margin = f64::INFINITY;
    for m in 2..=64 {
        let r = parallel::worst_probabilistic_error(m, n, EIGHT_OVER_PI2).expect("valid sweep");
        worst_margin = worst_margin.min(0.75 * PI / m as f64 + 1e-12 - r.value);
    }
    out.push(check(
        "worst error <= 3pi/4M, N=2^12, M=2..64",
        worst_margin >= 0.0,
        format!("min slack {worst_margin:.3e}"),
    ));

    let mut chain_margin = f64::INFINITY;
    for n in [1u64 << 2, 1 << 8, 1 << 12] {
        for m in 2..=64 {
            for p in [0.51, 0.6, 0.75, EIGHT_OVER_PI2] {
                let r = parallel::worst_probabilistic_error(m, n, p).expect("valid sweep");
                let bound = c_bound(p, m).expect("p in range") * PI / m as f64;
                chain_margin = chain_margin.min(bound + 1e-12 - r.value);
            }
        }
    }
    out.push(check(
        "worst error <= C(p) pi/M",
        chain_margin >= 0.0,
        format!("min slack {chain_margin:.3e}"),
    ));

    let mut ratios = Vec::new();
    for p in [0.51, 0.6, 0.75, EIGHT_OVER_PI2] {
        let r = parallel::worst_probabilistic_error(64, 1 << 20, p).expect("valid sweep");
        let scale = (1.0 - v_inverse(p).expect("p in range")) * PI / 64.0;
        ratios.push(r.value / scale);
    }
    let ok = ratios.iter().all(|r| (0.85..=1.0).contains(r));
    out.push(check(
        "asymptotic ratio, M=64, N=2^20",
        ok,
        format!("ratios {ratios:.4?} in [0.85, 1]"),
    ));

    let mut rounding = f64::INFINITY;
    for n in [2u64, 4, 8] {
        let m = rounding_resolution(n);
        for k in 0..=n {
            rounding = rounding.min(rounding_success_probability(k, n, m).expect("valid mean"));
        }
    }
    out.push(check(
        "rounding recovers k/N for M > 3piN/2",
        rounding >= EIGHT_OVER_PI2 - 1e-12,
        format!("min probability {rounding:.6}"),
    ));

    let plan = queries_for_epsilon(0.01, EIGHT_OVER_PI2).expect("valid target");
    let r =
        parallel::worst_probabilistic_error(plan.m, 1 << 20, EIGHT_OVER_PI2).expect("valid sweep");
    out.push(check(
        "epsilon plan M=236 reaches 0.01",
        plan.m == 236 && plan.queries == 235 && r.value <= 0.01,
        format!("M={} error {:.6}", plan.m, r.value),
    ));
    out
}

fn calculus() -> Vec<Check> {
    let mut out = Vec::new();
    let q8 = v_inverse(EIGHT_OVER_PI2).expect("in range");
    let q4 = v_inverse(FOUR_OVER_PI2).expect("in range");
    let c75 = (1.0 - v_inverse(0.75).expect("in range")) * PI;
    let c501 = (1.0 - v_inverse(0.501).expect("in range")) * PI;
    out.push(check(
        "inverse anchors",
        (q8 - 0.25).abs() <= 1e-10 && (q4 - 0.5).abs() <= 1e-10,
        format!("v^-1(8/pi2)={q8:.12} v^-1(4/pi2)={q4:.12}"),
    ));
    out.push(check(
        "constants for common levels",
        (c75 - 2.23).abs() <= 0.01 && (c501 - 1.75).abs() <= 0.01,
        format!("p=0.75: {c75:.4}, p=0.501: {c501:.4}"),
    ));
    let residual = (0..1000)
        .map(|i| {
            let p = FOUR_OVER_PI2 + (EIGHT_OVER_PI2 - FOUR_OVER_PI2) * i as f64 / 999.0;
            (linear_estimate(p) - (1.0 - v_inverse(p).expect("in range"))).abs()
        })
        .fold(0.0, f64::max);
    out.push(check(
        "linear estimate residual",
        residual <= 0.0085,
        format!("max {residual:.5} <= 0.0085"),
    ));

    let decreasing = (0..1000).all(|i| {
        let d = 0.25 + 0.25 * i as f64 / 1000.0;
        v(d + 0.25 / 1000.0) < v(d)
    });
    let g_min = (0..=10_000).all(|i| {
        let d = i as f64 / 10_000.0;
        if i == 5000 {
            (g(d) - EIGHT_OVER_PI2).abs() < 1e-15
        } else {
            g(d) > EIGHT_OVER_PI2
        }
    });
    let h_min = (0..=10_000).all(|i| {
        let d = i as f64 / 10_000.0;
        !(d <= 0.25 || d >= 0.75) || h(d) >= EIGHT_OVER_PI2 - 1e-15
    });
    out.push(check(
        "v decreasing, g and h minima",
        decreasing && g_min && h_min,
        String::new(),
    ));

    let moment_dev = (1..=24)
        .map(|n| {
            let a = first_moment(Measure::UniformOnFunctions, n).expect("n >= 1");
            let b = first_moment_by_summation(Measure::UniformOnFunctions, n).expect("n >= 1");
            (a - b).abs()
        })
        .fold(0.0, f64::max);
    out.push(check(
        "first moment closed form, N<=24",
        moment_dev <= 1e-14,
        format!("max {moment_dev:.3e}"),
    ));
    let n = 1u64 << 12;
    let ratio = first_moment(Measure::UniformOnFunctions, n).expect("n >= 1")
        * (2.0 * PI * n as f64).sqrt();
    let m2 = first_moment(Measure::UniformOnMeans, n).expect("n >= 1");
    out.push(check(
        "first moments at N=2^12",
        (0.99..=1.01).contains(&ratio) && (0.24..=0.26).contains(&m2),
        format!("p1 * sqrt(2piN) = {ratio:.5}, p2 = {m2:.5}"),
    ));
    let norm = (1..=400u64)
        .flat_map(|m| [0.0, 0.1, 0.37, 0.5, 0.9, 1.0].map(|a| (a, m)))
        .map(|(a, m)| (distribution_real(a, m).expect("valid").total() - 1.0).abs())
        .fold(0.0, f64::max);
    out.push(check(
        "distribution normalisation",
        norm <= 1e-12,
        format!("max {norm:.3e}"),
    ));
    let mut rng = seeded_rng(13);
    let kdev = (0..1000)
        .map(|_| {
            let m = rng.random_range(1..=64u64);
            let (w1, w2) = (rng.random::<f64>(), rng.random::<f64>());
            let d = w1 - w2;
            let s: Complex64 = (0..m)
                .map(|x| num_complex(0.0, 2.0 * PI * x as f64 * d).exp())
                .sum();
            (kernel(w1, w2, m) - s.norm_sqr() / (m * m) as f64).abs()
        })
        .fold(0.0, f64::max);
    out.push(check(
        "kernel vs direct sum",
        kdev <= 1e-12,
        format!("max {kdev:.3e}"),
    ));
    out
}

fn average_case() -> Vec<Check> {
    let mut out = Vec::new();
    let n = 1u64 << 12;
    for m in [4u64, 8, 16, 32] {
        let r = parallel::avg_probabilistic_error(m, n, 0.75, Measure::UniformOnFunctions, 2.0)
            .expect("valid sweep");
        let bound = wa4_upper_bound(m, n).expect("4 | M");
        out.push(check(
            &format!("avg error <= upper bound, M={m}"),
            r.value <= bound,
            format!("{:.6e} <= {bound:.6e}", r.value),
        ));
    }
    for m in [5u64, 6, 7, 18] {
        let r = parallel::avg_probabilistic_error(m, n, 0.75, Measure::UniformOnFunctions, 2.0)
            .expect("valid sweep");
        let bound = wan4_lower_bound(m, n, 2.0).expect("4 does not divide M");
        out.push(check(
            &format!("avg error >= lower bound, M={m}"),
            r.value >= bound,
            format!("{:.6e} >= {bound:.6e}", r.value),
        ));
    }
    let r = parallel::avg_probabilistic_error(32, n, 0.75, Measure::UniformOnMeans, 2.0)
        .expect("valid sweep");
    out.push(check(
        "avg error under p2, M=32",
        r.value > 0.0 && r.value <= 3.0 * PI / 128.0,
        format!("{:.6e} in (0, 3pi/128]", r.value),
    ));
    // With N = 1 both a = 0 and a = 1 carry weight; both are exact for even M.
    let degenerate = (2..=16u64).step_by(2).all(|m| {
        analysis::avg_probabilistic_error(m, 1, 0.75, Measure::UniformOnFunctions)
            .map(|r| r.value == analysis::error_at_level_for(0.0, m, 0.75).expect("valid"))
            .unwrap_or(false)
    });
    out.push(check(
        "N=1 average equals the error at a=0, even M",
        degenerate,
        String::new(),
    ));
    out
}
