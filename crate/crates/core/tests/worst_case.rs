use qsum_core::analysis::{queries_for_epsilon, worst_probabilistic_error, EIGHT_OVER_PI2};

#[test]
fn epsilon_plan_meets_its_target() {
    let plan = queries_for_epsilon(0.01, EIGHT_OVER_PI2).unwrap();
    assert_eq!(plan.m, 236);
    let r = worst_probabilistic_error(plan.m, 1 << 20, EIGHT_OVER_PI2).unwrap();
    assert!(r.value <= 0.01, "{}", r.value);
}

#[test]
fn level_constant_chain() {
    for n in [1u64 << 2, 1 << 8, 1 << 12] {
        for m in 2..=64 {
            for p in [0.51, 0.6, 0.75, EIGHT_OVER_PI2] {
                let r = worst_probabilistic_error(m, n, p).unwrap();
                let bound =
                    qsum_core::analysis::c_bound(p, m).unwrap() * std::f64::consts::PI / m as f64;
                assert!(r.value <= bound + 1e-12, "m={m} n={n} p={p}");
            }
        }
    }
}
