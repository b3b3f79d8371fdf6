//! Inner binomial-sum sources for the convergent evaluators.
//!
//! Two engines produce `D_n = sum_k C(n,k)(-1)^k f(k)` sequentially:
//!
//! - [`ExactInner`]: exact rationals, for f(k) = x^k (a+k)^{-s} with integer
//!   s >= 1 and rational a, x. For x = 1 the alternating sum collapses to
//!   `n!/prod(a+k)` times a complete homogeneous symmetric function of the
//!   1/(a+k), updated incrementally in O(s^2) rational ops per n; for x != 1
//!   each row is summed directly (geometric (1-x)^n decay keeps n small).
//! - [`DiffTableInner`]: a forward-difference table over guarded fixed-point
//!   values; absolute error through n cascade levels stays below
//!   2^n * 2^-level_bits, so keeping level_bits >= capacity + target bits
//!   guards the 2^n amplification. Used for logarithmic and real-exponent
//!   values, where no exact form exists.

use crate::dyadic::Dyadic;
use crate::exact_core::{rat, ExactRational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) trait InnerSource {
    /// Produce D_0, D_1, ... on successive calls.
    fn next(&mut self) -> Dyadic;
    /// Largest row this source can afford; the outer driver stops there.
    fn cap_hint(&self) -> usize {
        usize::MAX
    }
}

/// Row cap for the difference-table engine. The cascade costs O(n^2) bigint
/// subtractions at n-bit guard width (O(n^3) bit operations overall), while
/// the fitted tail estimate improves the partial sum far faster than more
/// rows would; past a couple thousand rows the extra work buys nothing.
pub(crate) const DIFF_TABLE_ROW_CAP: usize = 2048;

// ---- exact/closed-form engine ----------------------------------------------

/// Closed-form engine for x = 1: `D_n = beta_n * h_{s-1}(1/a, ..., 1/(a+n))`
/// with `beta_n = n!/prod(a+k)`, h complete homogeneous. For s = 1 the state
/// is a single small reduced rational and everything stays exact; for s >= 2
/// the power sums pick up lcm-sized denominators, so the (cancellation-free,
/// all-positive) recursion runs in fixed point instead.
pub(crate) struct ExactInner {
    a: ExactRational,
    s: u32,
    out_bits: u32,
    n: usize,
    state: ClosedFormState,
}

enum ClosedFormState {
    ExactS1 { beta: ExactRational },
    Fixed { work_bits: u32, beta: Dyadic, power_sums: Vec<Dyadic> },
}

impl ExactInner {
    pub fn new(a: ExactRational, s: u32, out_bits: u32) -> Self {
        assert!(s >= 1);
        let state = if s == 1 {
            ClosedFormState::ExactS1 { beta: BigRational::zero() }
        } else {
            let work_bits = out_bits + 32;
            ClosedFormState::Fixed {
                work_bits,
                beta: Dyadic::zero(),
                power_sums: vec![Dyadic::zero().with_bits(work_bits); (s - 1) as usize],
            }
        };
        ExactInner { a, s, out_bits, n: 0, state }
    }
}

impl InnerSource for ExactInner {
    fn next(&mut self) -> Dyadic {
        let n = self.n;
        let an = &self.a + rat(n as i64);
        self.n += 1;
        match &mut self.state {
            ClosedFormState::ExactS1 { beta } => {
                if n == 0 {
                    *beta = rat(1) / an;
                } else {
                    *beta = &*beta * rat(n as i64) / an;
                }
                Dyadic::from_rat(beta, self.out_bits)
            }
            ClosedFormState::Fixed { work_bits, beta, power_sums } => {
                let wb = *work_bits;
                let an_d = Dyadic::from_rat(&an, wb);
                if n == 0 {
                    *beta = Dyadic::one().with_bits(wb).div_bits(&an_d, wb);
                } else {
                    *beta = beta.mul_int(&BigInt::from(n as i64)).div_bits(&an_d, wb);
                }
                let inv = Dyadic::one().with_bits(wb).div_bits(&an_d, wb);
                let mut pw = inv.clone();
                for p in power_sums.iter_mut() {
                    *p = (p.clone() + pw.clone()).with_bits(wb);
                    pw = pw * inv.clone();
                }
                // h_r by Newton's identity: r h_r = sum_{i<=r} p_i h_{r-i}
                let order = (self.s - 1) as usize;
                let mut h = vec![Dyadic::one().with_bits(wb)];
                for r in 1..=order {
                    let mut acc = Dyadic::zero().with_bits(wb);
                    for i in 1..=r {
                        acc = acc + power_sums[i - 1].clone() * h[r - i].clone();
                    }
                    h.push(acc.div_small(r as u64));
                }
                (beta.clone() * h[order].clone()).with_bits(self.out_bits)
            }
        }
    }
}

// ---- difference-table engine ----------------------------------------------

/// Sequential value generator: successive calls yield f(0), f(1), ...
type ValueGen = Box<dyn FnMut() -> Dyadic>;

pub(crate) struct DiffTableInner {
    gen: ValueGen,
    raw: Vec<Dyadic>,
    state: Vec<Dyadic>,
    consumed: usize,
    n: usize,
    cap: usize,
}

impl DiffTableInner {
    /// `make` receives the value precision (fixed once from the row cap, so
    /// every raw value is computed exactly once).
    pub fn new<F>(target_bits: u32, make: F) -> Self
    where
        F: FnOnce(u32) -> ValueGen,
    {
        let cap = DIFF_TABLE_ROW_CAP;
        let bits = cap as u32 + target_bits + 64;
        DiffTableInner { gen: make(bits), raw: Vec::new(), state: Vec::new(), consumed: 0, n: 0, cap }
    }

    fn extend_to(&mut self, len: usize) {
        while self.raw.len() < len {
            let v = (self.gen)();
            self.raw.push(v);
        }
        // rebuild the cascade state from the raw values
        self.state = self.raw.clone();
        for step in 0..self.consumed {
            for k in 0..self.state.len() - 1 - step {
                self.state[k] = self.state[k].clone() - self.state[k + 1].clone();
            }
        }
    }
}

impl InnerSource for DiffTableInner {
    fn cap_hint(&self) -> usize {
        self.cap
    }

    fn next(&mut self) -> Dyadic {
        let n = self.n;
        if n + 1 >= self.raw.len() {
            let want = ((self.raw.len() * 2).max(64)).min(self.cap + 2).max(n + 2);
            self.extend_to(want);
        }
        while self.consumed < n {
            let step = self.consumed;
            for k in 0..self.state.len() - 1 - step {
                self.state[k] = self.state[k].clone() - self.state[k + 1].clone();
            }
            self.consumed += 1;
        }
        self.n += 1;
        self.state[0].clone()
    }
}

/// Values ln(z+k), built once with a full log and then chained through
/// ln((z+k+1)/(z+k)) (small-argument logs converge in a handful of terms).
pub(crate) fn fill_log_shifted(z: ExactRational) -> impl FnOnce(u32) -> ValueGen {
    move |bits| {
        let mut k = 0usize;
        let mut cur = Dyadic::zero();
        Box::new(move || {
            if k == 0 {
                cur = Dyadic::from_rat(&z, bits).ln();
            } else {
                let ratio = (&z + rat(k as i64)) / (&z + rat(k as i64 - 1));
                cur = cur.clone() + Dyadic::from_rat(&ratio, bits).ln();
            }
            k += 1;
            cur.clone()
        })
    }
}

/// Values ln(1 + k/z): the same chain started at zero.
pub(crate) fn fill_log_ratio(z: ExactRational) -> impl FnOnce(u32) -> ValueGen {
    move |bits| {
        let mut k = 0usize;
        let mut cur = Dyadic::zero();
        Box::new(move || {
            if k == 0 {
                cur = Dyadic::zero().with_bits(bits);
            } else {
                let ratio = (&z + rat(k as i64)) / (&z + rat(k as i64 - 1));
                cur = cur.clone() + Dyadic::from_rat(&ratio, bits).ln();
            }
            k += 1;
            cur.clone()
        })
    }
}

/// Values x^k (a+k)^{-s} for integer s >= 1 and rational x: exact rationals
/// rounded once into the table's guard precision.
pub(crate) fn fill_rational_pow(
    a: ExactRational,
    s: u32,
    x: ExactRational,
) -> impl FnOnce(u32) -> ValueGen {
    move |bits| {
        let mut k = 0usize;
        let mut xpow = BigRational::one();
        Box::new(move || {
            if k > 0 {
                xpow *= &x;
            }
            let v = &xpow / (&a + rat(k as i64)).pow(s as i32);
            k += 1;
            Dyadic::from_rat(&v, bits)
        })
    }
}

/// Values x^k (a+k)^{-s} for real (rational, possibly non-integer) s and
/// 0 < x <= 1, via exp(k ln x - s ln(a+k)).
pub(crate) fn fill_pow_shifted(
    a: ExactRational,
    s: ExactRational,
    x: Option<ExactRational>,
) -> impl FnOnce(u32) -> ValueGen {
    move |bits| {
        let s_d = Dyadic::from_rat(&s, bits);
        let ln_x = x.as_ref().map(|v| Dyadic::from_rat(v, bits).ln());
        let mut k = 0usize;
        let mut ln_ak = Dyadic::zero();
        Box::new(move || {
            if k == 0 {
                ln_ak = Dyadic::from_rat(&a, bits).ln();
            } else {
                let ratio = (&a + rat(k as i64)) / (&a + rat(k as i64 - 1));
                ln_ak = ln_ak.clone() + Dyadic::from_rat(&ratio, bits).ln();
            }
            let mut e = -(s_d.clone() * ln_ak.clone());
            if let Some(lx) = &ln_x {
                e = e + lx.mul_int(&BigInt::from(k as i64));
            }
            k += 1;
            e.exp()
        })
    }
}
