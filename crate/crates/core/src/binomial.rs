//! Symmetric binomial weights `2^{-n} C(n, k)`.
//!
//! Small `n` uses exact integer coefficients. Beyond that the weight is
//! formed in log space with the saddle-point expansion of Loader
//! ("Fast and accurate computation of binomial probabilities", 2000), which
//! keeps relative accuracy near machine precision for `n` in the millions
//! where differences of `ln Γ` lose roughly `log10(n ln n)` digits.

use core::f64::consts::PI;

/// Largest `n` for which the coefficient is formed exactly in integers.
pub const EXACT_LIMIT: u64 = 64;

/// `ln(n!) - ln(sqrt(2πn) (n/e)^n)` for `n = 0..=15`.
#[allow(clippy::excessive_precision)]
const STIRLING_ERR: [f64; 16] = [
    0.0,
    0.081_061_466_795_327_258_219_67,
    0.041_340_695_955_409_294_093_82,
    0.027_677_925_684_998_339_148_79,
    0.020_790_672_103_765_093_111_52,
    0.016_644_691_189_821_192_163_19,
    0.013_876_128_823_070_747_998_75,
    0.011_896_709_945_891_770_095_06,
    0.010_411_265_261_972_096_497_48,
    0.009_255_462_182_712_732_917_729,
    0.008_330_563_433_362_871_256_469,
    0.007_573_675_487_951_840_794_972,
    0.006_942_840_107_209_529_865_664,
    0.006_408_994_188_004_207_068_44,
    0.005_951_370_112_758_847_735_624,
    0.005_554_733_551_962_801_371_039,
];

/// Exact `C(n, k)` for `n <= 64`.
pub fn binomial_exact(n: u64, k: u64) -> u128 {
    debug_assert!(n <= EXACT_LIMIT && k <= n);
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c * (n - i) is divisible by (i + 1) at every step.
        c = c * u128::from(n - i) / u128::from(i + 1);
    }
    c
}

/// `2^{-n} C(n, k)`; zero for `k > n`.
pub fn half_binomial_pmf(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    if n <= EXACT_LIMIT {
        return libm::ldexp(binomial_exact(n, k) as f64, -(n as i32));
    }
    if k == 0 || k == n {
        return libm::ldexp(1.0, -(n.min(i32::MAX as u64) as i32));
    }
    let (nf, kf) = (n as f64, k as f64);
    let mean = 0.5 * nf;
    let lc = stirling_err(n)
        - stirling_err(k)
        - stirling_err(n - k)
        - deviance(kf, mean)
        - deviance(nf - kf, mean);
    let lf = libm::log(2.0 * PI) + libm::log(kf) + libm::log1p(-kf / nf);
    libm::exp(lc - 0.5 * lf)
}

fn stirling_err(n: u64) -> f64 {
    const S0: f64 = 1.0 / 12.0;
    const S1: f64 = 1.0 / 360.0;
    const S2: f64 = 1.0 / 1260.0;
    const S3: f64 = 1.0 / 1680.0;
    const S4: f64 = 1.0 / 1188.0;
    if n < STIRLING_ERR.len() as u64 {
        return STIRLING_ERR[n as usize];
    }
    let x = n as f64;
    let xx = x * x;
    if n > 500 {
        (S0 - S1 / xx) / x
    } else if n > 80 {
        (S0 - (S1 - S2 / xx) / xx) / x
    } else if n > 35 {
        (S0 - (S1 - (S2 - S3 / xx) / xx) / xx) / x
    } else {
        (S0 - (S1 - (S2 - (S3 - S4 / xx) / xx) / xx) / xx) / x
    }
}

/// `x ln(x/np) + np - x`, evaluated by series when `x` is close to `np`.
fn deviance(x: f64, np: f64) -> f64 {
    if libm::fabs(x - np) < 0.1 * (x + np) {
        let mut v = (x - np) / (x + np);
        let mut s = (x - np) * v;
        let mut ej = 2.0 * x * v;
        v *= v;
        let mut j = 1.0;
        loop {
            ej *= v;
            let next = s + ej / (2.0 * j + 1.0);
            if next == s {
                return next;
            }
            s = next;
            j += 1.0;
        }
    }
    x * libm::log(x / np) + np - x
}
