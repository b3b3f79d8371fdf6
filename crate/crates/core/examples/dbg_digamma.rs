use binomial_series::exact_core::{rat, ratio};
use binomial_series::special_functions::{digamma, hurwitz_zeta, lerch_phi, EvalConfig};

fn main() {
    let c = EvalConfig::default();
    let z3 = hurwitz_zeta(&rat(2), &rat(1), &c).unwrap();
    println!(
        "zeta(3) route: {} n={} reason={:?} est={:.3e} err={:.3e}",
        z3.value.to_decimal(20),
        z3.terms_used,
        z3.stop_reason,
        z3.error_estimate,
        (z3.value_f64() - 1.2020569031595942854_f64).abs()
    );
    let (comb, alt) = lerch_phi(&ratio(1, 2), &rat(2), &rat(1), &c).unwrap();
    let phi = |xx: f64, ss: f64, aa: f64| {
        let mut sum = 0.0;
        for k in 0..500 {
            sum += xx.powi(k) / (aa + k as f64).powf(ss);
        }
        sum
    };
    let want_comb = 2.0 * phi(0.5, 3.0, 1.0) - 0.5f64.ln() * phi(0.5, 2.0, 1.0);
    println!(
        "lerch comb: {} n={} reason={:?} est={:.3e} err={:.3e}",
        comb.value.to_decimal(20),
        comb.terms_used,
        comb.stop_reason,
        comb.error_estimate,
        (comb.value_f64() - want_comb).abs()
    );
    println!(
        "lerch alt : err={:.3e} est={:.3e}",
        (alt.value_f64() - phi(-0.5, 2.0, 1.0)).abs(),
        alt.error_estimate
    );
    let p1 = digamma(&rat(1), &c).unwrap();
    println!(
        "psi(1): {} n={} est={:.3e} err={:.3e}",
        p1.value.to_decimal(20),
        p1.terms_used,
        p1.error_estimate,
        (p1.value_f64() + 0.5772156649015328606_f64).abs()
    );
}
