//! Tail estimation for the convergent outer series.
//!
//! The outer terms of the Hasse-type series decay polynomially for small
//! shift parameters, so a bare partial sum can be many digits short of its
//! own last term's apparent accuracy. After the stopping rule fires we fit
//! the recent terms with either a geometric model `t_n ~ t r^n` or a
//! corrected power law `ln|t| = A - p ln x + q/x` (x = n+1) and add the
//! fitted tail via a midpoint integral. Two fit windows give an empirical
//! uncertainty for the correction.

/// One recorded outer term: index, sign, and ln|t_n|.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Sample {
    pub n: usize,
    pub sign: i8,
    pub ln_abs: f64,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct TailEstimate {
    pub correction: f64,
    pub uncertainty: f64,
}

/// Estimate the tail `sum_{n >= next_n} t_n` from the trailing history.
/// `hist` must hold consecutive indices ending at `next_n - 1`.
pub(crate) fn estimate_tail(hist: &[Sample], next_n: usize) -> Option<TailEstimate> {
    let last = hist.last()?;
    if last.n + 1 != next_n || hist.len() < 7 {
        return None;
    }
    let w = ((hist.len() - 1) / 2).min(32).max(1);
    let t1 = tail_once(hist, next_n, w)?;
    let t2 = tail_once(hist, next_n, (w / 2).max(1));
    let uncertainty = match t2 {
        Some(t2) if (w / 2).max(1) != w => (t1 - t2).abs().max(t1.abs() * 1e-13),
        _ => t1.abs() * 0.5,
    };
    Some(TailEstimate { correction: t1, uncertainty })
}

fn tail_once(hist: &[Sample], next_n: usize, w: usize) -> Option<f64> {
    if hist.len() < 2 * w + 1 {
        return None;
    }
    let c = hist[hist.len() - 1];
    let b = hist[hist.len() - 1 - w];
    let a = hist[hist.len() - 1 - 2 * w];
    let prev = hist[hist.len() - 2];

    // signed consecutive ratio for the geometric model
    let r_step = ((c.ln_abs - a.ln_abs) / (c.n - a.n) as f64).exp();
    let r_signed = r_step * (c.sign as f64) * (prev.sign as f64);
    let t_c = (c.sign as f64) * c.ln_abs.exp();

    let same_sign = a.sign == b.sign && b.sign == c.sign;
    let geometric = |r: f64| -> Option<f64> {
        if r.abs() > 0.995 || !r.is_finite() {
            None
        } else {
            Some(t_c * r / (1.0 - r))
        }
    };

    if !same_sign || r_step < 0.9 {
        return geometric(r_signed);
    }

    // corrected power law through (a, b, c): y = A - p ln x + q / x
    let x_c = (c.n + 1) as f64;
    let to_uv = |s: &Sample| {
        let x = (s.n + 1) as f64;
        ((x / x_c).ln(), 1.0 / x - 1.0 / x_c, s.ln_abs - c.ln_abs)
    };
    let (ua, va, ya) = to_uv(&a);
    let (ub, vb, yb) = to_uv(&b);
    let det = ub * va - ua * vb;
    if det.abs() < 1e-300 {
        return geometric(r_signed);
    }
    // ya = -p ua + q va ; yb = -p ub + q vb
    let p = (ya * vb - yb * va) / det;
    let q = (ya * ub - yb * ua) / det;
    if !(p.is_finite() && q.is_finite()) || p <= 1.05 {
        return geometric(r_signed);
    }
    // integral of e^A x^{-p} (1 + q/x) from the midpoint before the first
    // omitted index; x runs over n+1
    let x0 = next_n as f64 + 0.5;
    if q.abs() / x0 > 1.0 {
        return geometric(r_signed);
    }
    let ln_main = p * (x_c / x0).ln() + x0.ln() - q / x_c;
    let factor = (c.ln_abs + ln_main).exp();
    let tail = factor * (1.0 / (p - 1.0) + q / (p * x0));
    if !tail.is_finite() {
        return geometric(r_signed);
    }
    Some((c.sign as f64) * tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hist_from<F: Fn(usize) -> f64>(f: F, from: usize, to: usize) -> Vec<Sample> {
        (from..=to)
            .map(|n| {
                let v = f(n);
                Sample { n, sign: if v < 0.0 { -1 } else { 1 }, ln_abs: v.abs().ln() }
            })
            .collect()
    }

    #[test]
    fn power_law_tail_inverse_square() {
        // t_n = 1/(n+1)^2, tail from N: trigamma(N+1)
        let n_last = 999;
        let hist = hist_from(|n| 1.0 / ((n + 1) as f64).powi(2), 900, n_last);
        let est = estimate_tail(&hist, n_last + 1).unwrap();
        // trigamma(1001) = 1/1001 + 1/(2*1001^2) + 1/(6*1001^3) - ...
        let x = 1001.0_f64;
        let truth = 1.0 / x + 1.0 / (2.0 * x * x) + 1.0 / (6.0 * x * x * x);
        let rel = (est.correction - truth).abs() / truth;
        assert!(rel < 1e-5, "rel={rel}");
        assert!(est.uncertainty < truth * 1e-2);
    }

    #[test]
    fn power_law_tail_with_log_drift() {
        // t_n = ln(n+1)/(n+1)^3: fitted exponent drifts slowly; estimate
        // should still land within a percent
        let n_last = 1499;
        let hist = hist_from(|n| ((n + 1) as f64).ln() / ((n + 1) as f64).powi(3), 1380, n_last);
        let est = estimate_tail(&hist, n_last + 1).unwrap();
        let mut truth = 0.0;
        for n in (n_last + 1)..3_000_000 {
            truth += ((n + 1) as f64).ln() / ((n + 1) as f64).powi(3);
        }
        let rel = (est.correction - truth).abs() / truth;
        assert!(rel < 1e-2, "rel={rel}");
    }

    #[test]
    fn geometric_tail() {
        let n_last = 60;
        let hist = hist_from(|n| 3.0 * 0.7f64.powi(n as i32), 30, n_last);
        let est = estimate_tail(&hist, n_last + 1).unwrap();
        let t_c = 3.0 * 0.7f64.powi(n_last as i32);
        let truth = t_c * 0.7 / 0.3;
        let rel = (est.correction - truth).abs() / truth;
        assert!(rel < 1e-9, "rel={rel}");
    }

    #[test]
    fn alternating_geometric_tail() {
        let n_last = 80;
        let hist = hist_from(|n| (-0.8f64).powi(n as i32), 40, n_last);
        let est = estimate_tail(&hist, n_last + 1).unwrap();
        let t_c = (-0.8f64).powi(n_last as i32);
        let truth = t_c * (-0.8) / 1.8;
        let rel = (est.correction - truth).abs() / truth.abs();
        assert!(rel < 1e-9, "rel={rel}");
    }

    #[test]
    fn refuses_divergent_and_short_histories() {
        // p <= 1 (harmonic) and no geometric fallback: returns None
        let hist = hist_from(|n| 1.0 / (n + 1) as f64, 900, 999);
        assert!(estimate_tail(&hist, 1000).is_none());
        // short history
        let hist = hist_from(|n| 1.0 / ((n + 1) as f64).powi(2), 0, 3);
        assert!(estimate_tail(&hist, 4).is_none());
        // stale history (not ending at next_n - 1)
        let hist = hist_from(|n| 1.0 / ((n + 1) as f64).powi(2), 0, 50);
        assert!(estimate_tail(&hist, 60).is_none());
    }
}
