//! Truncated formal power series, alternating binomial sums, and the
//! transformation formulas that rewrite weighted sums of binomial transforms
//! as expansions in the exponential/geometric/Bernoulli-type polynomial
//! families, plus the Euler-type series transformations.
//!
//! Everything here is generic over [`Scalar`], so identity suites run the
//! same code paths in exact rationals that the numeric evaluators run in
//! guarded fixed-point. Alternating binomial sums amplify absolute error by
//! roughly 2^n, so inexact callers must size the scalar precision as
//! `target_bits + n` (the convergent evaluators in `special_functions` do
//! this per row).

use crate::dyadic::Dyadic;
use crate::exact_core::{
    binomial, factorial, rat, stirling1_signed, ExactRational,
};
use crate::poly_families::{exp_poly, geom_poly, poly_bernoulli_poly, PolynomialExact};
use crate::scalar::{spow, Scalar, Transcendental};
use crate::StopReason;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("evaluation outside the provider's domain: {0}")]
    Domain(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

// ---- truncated series ----------------------------------------------------

/// Coefficients a_0..a_M of a formal power series, truncated at order M.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_rationals(rs: &[ExactRational], bits: u32) -> Self {
        TruncatedSeries { coeffs: rs.iter().map(|r| S::from_rat(r, bits)).collect() }
    }

    pub fn from_polynomial(p: &PolynomialExact, bits: u32) -> Self {
        Self::from_rationals(p.coeffs(), bits)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> S {
        self.coeffs.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Horner evaluation of the truncation (a polynomial).
    pub fn eval(&self, t: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }
}

// ---- coefficient providers -------------------------------------------------

/// A function known through its Taylor coefficients, with a direct evaluator.
pub trait SeriesFn<S: Scalar> {
    /// Taylor coefficient a_m at the origin.
    fn coeff(&self, m: usize) -> S;
    /// Direct value f(t).
    fn eval(&self, t: &S) -> Result<S, SeriesError>;
}

impl<S: Scalar> SeriesFn<S> for TruncatedSeries<S> {
    fn coeff(&self, m: usize) -> S {
        TruncatedSeries::coeff(self, m)
    }
    fn eval(&self, t: &S) -> Result<S, SeriesError> {
        Ok(TruncatedSeries::eval(self, t))
    }
}

/// f(t) = t^m.
pub struct Monomial(pub usize);

impl<S: Scalar> SeriesFn<S> for Monomial {
    fn coeff(&self, m: usize) -> S {
        if m == self.0 {
            S::one()
        } else {
            S::zero()
        }
    }
    fn eval(&self, t: &S) -> Result<S, SeriesError> {
        Ok(spow(t, self.0))
    }
}

/// f(t) = e^t.
pub struct ExpSeries;

impl<S: Transcendental> SeriesFn<S> for ExpSeries {
    fn coeff(&self, m: usize) -> S {
        S::from_rat(&BigRational::new(BigInt::one(), factorial(m)), 0)
    }
    fn eval(&self, t: &S) -> Result<S, SeriesError> {
        Ok(t.exp_())
    }
}

/// f(t) = 1 - e^{-t}.
pub struct OneMinusExpNeg;

impl<S: Transcendental> SeriesFn<S> for OneMinusExpNeg {
    fn coeff(&self, m: usize) -> S {
        if m == 0 {
            return S::zero();
        }
        let sign = if m % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        S::from_rat(&BigRational::new(sign, factorial(m)), 0)
    }
    fn eval(&self, t: &S) -> Result<S, SeriesError> {
        Ok(S::one() - (-t.clone()).exp_())
    }
}

/// f(t) = (1+t)^{-s} for integer s >= 1; exact on rational input.
pub struct BinomialPowerInt(pub u32);

impl<S: Scalar> SeriesFn<S> for BinomialPowerInt {
    fn coeff(&self, m: usize) -> S {
        let c = crate::exact_core::generalized_binomial(&rat(-(self.0 as i64)), m);
        S::from_rat(&c, 0)
    }
    fn eval(&self, t: &S) -> Result<S, SeriesError> {
        let base = S::one() + t.clone();
        if base.is_zero() {
            return Err(SeriesError::Domain("(1+t)^-s pole at t = -1"));
        }
        Ok(S::one() / spow(&base, self.0 as usize))
    }
}

/// f(t) = (1+t)^{-s} for real (rational) s.
pub struct BinomialPowerReal(pub ExactRational);

impl<S: Transcendental> SeriesFn<S> for BinomialPowerReal {
    fn coeff(&self, m: usize) -> S {
        let c = crate::exact_core::generalized_binomial(&-self.0.clone(), m);
        S::from_rat(&c, 0)
    }
    fn eval(&self, t: &S) -> Result<S, SeriesError> {
        let base = S::one() + t.clone();
        if base.approx_f64() <= 0.0 {
            return Err(SeriesError::Domain("(1+t)^-s needs 1+t > 0"));
        }
        let p = S::from_rat(&-self.0.clone(), t.prec_bits());
        Ok(base.pow_(&p))
    }
}

/// f(t) = log(1 + t/z) for rational z != 0.
pub struct LogArgShift(pub ExactRational);

impl<S: Transcendental> SeriesFn<S> for LogArgShift {
    fn coeff(&self, m: usize) -> S {
        if m == 0 {
            return S::zero();
        }
        // (-1)^{m-1} / (m z^m)
        let mut den = self.0.clone();
        for _ in 1..m {
            den *= &self.0;
        }
        den *= rat(m as i64);
        let c = if m % 2 == 1 { den.recip() } else { -den.recip() };
        S::from_rat(&c, 0)
    }
    fn eval(&self, t: &S) -> Result<S, SeriesError> {
        let z = S::from_rat(&self.0, t.prec_bits());
        let arg = S::one() + t.clone() / z;
        if arg.approx_f64() <= 0.0 {
            return Err(SeriesError::Domain("log(1+t/z) needs 1+t/z > 0"));
        }
        Ok(arg.ln_())
    }
}

/// f(t) = C(t, p), the binomial polynomial.
pub struct ChoosePoly(pub usize);

impl<S: Scalar> SeriesFn<S> for ChoosePoly {
    fn coeff(&self, m: usize) -> S {
        if m > self.0 {
            return S::zero();
        }
        let c = BigRational::new(stirling1_signed(self.0, m), factorial(self.0));
        S::from_rat(&c, 0)
    }
    fn eval(&self, t: &S) -> Result<S, SeriesError> {
        let mut acc = S::one();
        for i in 0..self.0 {
            acc = acc * (t.clone() - S::from_rat(&rat(i as i64), t.prec_bits()));
        }
        Ok(acc / S::from_rat(&BigRational::from_integer(factorial(self.0)), t.prec_bits()))
    }
}

/// f(t) = x^t / (a+t)^s with 0 < x <= 1 (coefficients mix log x powers with
/// generalized binomials). Numeric-only.
pub struct PowQuotient {
    pub x: ExactRational,
    pub s: ExactRational,
    pub a: ExactRational,
    pub bits: u32,
}

impl SeriesFn<Dyadic> for PowQuotient {
    fn coeff(&self, n: usize) -> Dyadic {
        let bits = self.bits;
        let ln_x = Dyadic::from_rat(&self.x, bits).ln();
        let a = Dyadic::from_rat(&self.a, bits);
        let s = Dyadic::from_rat(&self.s, bits);
        // sum_{k=0}^n C(-s, n-k) log^k x / (k! a^{n+s-k})
        let a_pow_s = a.pow(&s);
        let mut acc = Dyadic::zero().with_bits(bits);
        let mut lnx_pow = Dyadic::one().with_bits(bits);
        for k in 0..=n {
            if k > 0 {
                lnx_pow = lnx_pow * ln_x.clone();
            }
            let gb = crate::exact_core::generalized_binomial(&-self.s.clone(), n - k);
            let coeff = Dyadic::from_rat(
                &(gb / BigRational::from_integer(factorial(k))),
                bits,
            );
            let denom = a.powi((n - k) as i64) * a_pow_s.clone();
            acc = acc + (coeff * lnx_pow.clone()).div_bits(&denom, bits);
        }
        acc
    }
    fn eval(&self, t: &Dyadic) -> Result<Dyadic, SeriesError> {
        let bits = self.bits.max(t.bits());
        let x = Dyadic::from_rat(&self.x, bits);
        let a = Dyadic::from_rat(&self.a, bits);
        let s = Dyadic::from_rat(&self.s, bits);
        let base = a + t.clone();
        if base.approx_f64() <= 0.0 {
            return Err(SeriesError::Domain("x^t/(a+t)^s needs a+t > 0"));
        }
        Ok(x.pow(t) / base.pow(&s))
    }
}

// ---- weights ---------------------------------------------------------------

/// Weight sequences attached to the binomial-sum series.
#[derive(Clone, Debug)]
pub enum WeightScheme<S> {
    /// x^n / n!
    Exp(S),
    /// x^n
    Geo(S),
    /// 1/(n+1)^r
    InvPow(u32),
    /// 1/2^{n+1}
    HalfShift,
    /// 1/2^n
    Half,
    /// x^n / n, starting at n = 1
    Harmonic(S),
    /// x^n / (n+1)^r
    IntPow(S, u32),
}

impl<S: Scalar> WeightScheme<S> {
    pub fn start(&self) -> usize {
        match self {
            WeightScheme::Harmonic(_) => 1,
            _ => 0,
        }
    }

    pub fn weight(&self, n: usize) -> S {
        let inv_pow = |r: u32| {
            let den = BigInt::from(n as i64 + 1).pow(r);
            BigRational::new(BigInt::one(), den)
        };
        match self {
            WeightScheme::Exp(x) => {
                spow(x, n) * S::from_rat(&BigRational::new(BigInt::one(), factorial(n)), x.prec_bits())
            }
            WeightScheme::Geo(x) => spow(x, n),
            WeightScheme::InvPow(r) => S::from_rat(&inv_pow(*r), 0),
            WeightScheme::HalfShift => {
                S::from_rat(&BigRational::new(BigInt::one(), BigInt::one() << (n + 1)), 0)
            }
            WeightScheme::Half => {
                S::from_rat(&BigRational::new(BigInt::one(), BigInt::one() << n), 0)
            }
            WeightScheme::Harmonic(x) => {
                spow(x, n) * S::from_rat(&BigRational::new(BigInt::one(), BigInt::from(n)), x.prec_bits())
            }
            WeightScheme::IntPow(x, r) => spow(x, n) * S::from_rat(&inv_pow(*r), x.prec_bits()),
        }
    }
}

// ---- operations -------------------------------------------------------------

/// The alternating binomial sum `sum_k C(n,k) (-1)^k f(y + zk)`.
pub fn binomial_sum<S: Scalar>(
    f: &dyn SeriesFn<S>,
    n: usize,
    y: &S,
    z: &S,
) -> Result<S, SeriesError> {
    let bits = y.prec_bits().max(z.prec_bits());
    let mut acc = S::zero();
    for k in 0..=n {
        let t = y.clone() + z.clone() * S::from_rat(&rat(k as i64), bits);
        let v = f.eval(&t)?;
        let c = S::from_rat(&BigRational::from_integer(binomial(n, k as i64)), bits);
        let term = c * v;
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    Ok(acc)
}

/// The coefficient-side form of the binomial sum:
/// `(-1)^n n! sum_m a_m sum_p C(m,p) S(p,n) z^p y^{m-p}`.
/// Equals [`binomial_sum`] exactly when `f` is the truncation itself.
pub fn lemma1_rhs<S: Scalar>(f: &TruncatedSeries<S>, n: usize, y: &S, z: &S) -> S {
    let bits = y.prec_bits().max(z.prec_bits());
    let order = f.order();
    let table = crate::exact_core::StirlingTable2::global();
    // powers of y and z up to the order
    let mut ypow = vec![S::one(); order + 1];
    let mut zpow = vec![S::one(); order + 1];
    for i in 1..=order {
        ypow[i] = ypow[i - 1].clone() * y.clone();
        zpow[i] = zpow[i - 1].clone() * z.clone();
    }
    let mut total = S::zero();
    for m in 0..=order {
        let a = f.coeff(m);
        if a.is_zero() {
            continue;
        }
        let mut inner = S::zero();
        for p in n..=m {
            let s = table.row(p)[n].clone();
            if s.is_zero() {
                continue;
            }
            let c = S::from_rat(&BigRational::from_integer(binomial(m, p as i64) * s), bits);
            inner = inner + c * zpow[p].clone() * ypow[m - p].clone();
        }
        total = total + a * inner;
    }
    let mut scale = BigRational::from_integer(factorial(n));
    if n % 2 == 1 {
        scale = -scale;
    }
    total * S::from_rat(&scale, bits)
}

/// `sum_{n>=1} (1/n) sum_k C(n,k)(-1)^k f(zk)`, truncated at `n_max`.
/// Equals `-f'(0) z` once `n_max` reaches the degree of a polynomial input.
pub fn prop1_series<S: Scalar>(
    f: &dyn SeriesFn<S>,
    z: &S,
    n_max: usize,
) -> Result<S, SeriesError> {
    let mut acc = S::zero();
    let zero = S::zero();
    for n in 1..=n_max {
        let bs = binomial_sum(f, n, &zero, z)?;
        acc = acc + bs * S::from_rat(&BigRational::new(BigInt::one(), BigInt::from(n)), z.prec_bits());
    }
    Ok(acc)
}

/// Result of a weighted partial summation.
#[derive(Clone, Debug)]
pub struct Evaluation<S> {
    pub value: S,
    pub terms_used: usize,
    pub stop_reason: StopReason,
    /// Magnitude of the last included term (0 when the series vanished).
    pub error_estimate: f64,
}

/// Partial sum `sum_n w(n) sum_k C(n,k)(-1)^k f(y+zk)` with the stopping rule
/// `|term| < tol * |partial sum|` sustained for three consecutive terms.
/// Exactly-zero terms always count toward the stop streak, so polynomial
/// inputs terminate with an exact value.
pub fn weighted_binomial_series<S: Scalar>(
    f: &dyn SeriesFn<S>,
    w: &WeightScheme<S>,
    y: &S,
    z: &S,
    n_max: usize,
    tol: f64,
) -> Result<Evaluation<S>, SeriesError> {
    let mut acc = S::zero();
    let mut streak = 0usize;
    let mut last_mag = 0.0f64;
    let mut used = 0usize;
    for n in w.start()..=n_max {
        let term = binomial_sum(f, n, y, z)? * w.weight(n);
        let mag = term.approx_f64().abs();
        acc = acc + term.clone();
        used = n + 1;
        if term.is_zero() || mag < tol * acc.approx_f64().abs() {
            streak += 1;
        } else {
            streak = 0;
        }
        if !term.is_zero() {
            last_mag = mag;
        } else if streak >= 3 {
            last_mag = 0.0;
        }
        if streak >= 3 {
            return Ok(Evaluation {
                value: acc,
                terms_used: used,
                stop_reason: StopReason::ToleranceMet,
                error_estimate: last_mag,
            });
        }
    }
    Ok(Evaluation {
        value: acc,
        terms_used: used,
        stop_reason: StopReason::MaxTerms,
        error_estimate: last_mag,
    })
}

fn eval_exact_poly_at<S: Scalar>(p: &PolynomialExact, x: &S, bits: u32) -> S {
    let mut acc = S::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc * x.clone() + S::from_rat(c, bits);
    }
    acc
}

/// Rational polynomial u -> sum_j S(p,j) j! u^j / (j+1)^r.
fn stirling_weight_poly(p: usize, r: u32) -> PolynomialExact {
    let row = crate::exact_core::StirlingTable2::global().row(p);
    let mut fact = BigInt::one();
    let coeffs = row
        .iter()
        .enumerate()
        .map(|(j, s)| {
            if j > 1 {
                fact *= BigInt::from(j);
            }
            BigRational::new(s * &fact, BigInt::from(j as i64 + 1).pow(r))
        })
        .collect();
    PolynomialExact::new(coeffs)
}

/// Evaluate the closed-form right-hand side matching a weighted binomial-sum
/// series over the truncation `f`, for the given weight scheme.
pub fn rhs_expansion<S: Scalar>(
    f: &TruncatedSeries<S>,
    w: &WeightScheme<S>,
    y: &S,
    z: &S,
) -> Result<S, SeriesError> {
    let bits = y.prec_bits().max(z.prec_bits());
    let order = f.order();

    // inner_p values: the polynomial-family factor multiplying C(m,p) z^p y^{m-p}
    let mut inner = Vec::with_capacity(order + 1);
    let mut halve = false;
    match w {
        WeightScheme::Exp(x) => {
            let nx = -x.clone();
            for p in 0..=order {
                inner.push(eval_exact_poly_at(&exp_poly(p), &nx, bits));
            }
        }
        WeightScheme::Geo(x) => {
            let nx = -x.clone();
            for p in 0..=order {
                inner.push(eval_exact_poly_at(&geom_poly(p), &nx, bits));
            }
        }
        WeightScheme::IntPow(x, r) => {
            let nx = -x.clone();
            for p in 0..=order {
                inner.push(eval_exact_poly_at(&stirling_weight_poly(p, *r), &nx, bits));
            }
        }
        WeightScheme::InvPow(r) => {
            let neg_one = -S::one();
            for p in 0..=order {
                inner.push(eval_exact_poly_at(&stirling_weight_poly(p, *r), &neg_one, bits));
            }
        }
        WeightScheme::HalfShift | WeightScheme::Half => {
            // omega_p(-1/2); the shifted weight carries an extra 1/2
            let neg_half = S::from_rat(&crate::exact_core::ratio(-1, 2), bits);
            for p in 0..=order {
                inner.push(eval_exact_poly_at(&geom_poly(p), &neg_half, bits));
            }
            halve = matches!(w, WeightScheme::HalfShift);
        }
        WeightScheme::Harmonic(x) => {
            if !y.is_zero() {
                return Err(SeriesError::InvalidParameter(
                    "harmonic-weight expansion is defined for y = 0",
                ));
            }
            // sum_m a_m z^m sum_{p>=1} S(m,p)(p-1)!(-x)^p
            let nx = -x.clone();
            let mut total = S::zero();
            let mut zpow = S::one();
            for m in 0..=order {
                if m > 0 {
                    zpow = zpow * z.clone();
                }
                let a = f.coeff(m);
                if a.is_zero() {
                    continue;
                }
                let row = crate::exact_core::StirlingTable2::global().row(m);
                let mut fact = BigInt::one(); // (p-1)!
                let mut sum = S::zero();
                let mut xp = S::one();
                for (p, s) in row.iter().enumerate() {
                    if p >= 1 {
                        if p > 1 {
                            fact *= BigInt::from(p - 1);
                        }
                        xp = xp.clone() * nx.clone();
                        sum = sum
                            + S::from_rat(&BigRational::from_integer(s * &fact), bits) * xp.clone();
                    }
                }
                total = total + a * zpow.clone() * sum;
            }
            return Ok(total);
        }
    }

    let mut ypow = vec![S::one(); order + 1];
    let mut zpow = vec![S::one(); order + 1];
    for i in 1..=order {
        ypow[i] = ypow[i - 1].clone() * y.clone();
        zpow[i] = zpow[i - 1].clone() * z.clone();
    }
    let mut total = S::zero();
    for m in 0..=order {
        let a = f.coeff(m);
        if a.is_zero() {
            continue;
        }
        let mut sum = S::zero();
        for p in 0..=m {
            let c = S::from_rat(&BigRational::from_integer(binomial(m, p as i64)), bits);
            sum = sum + c * zpow[p].clone() * ypow[m - p].clone() * inner[p].clone();
        }
        total = total + a * sum;
    }
    if halve {
        total = total * S::from_rat(&crate::exact_core::ratio(1, 2), bits);
    }
    Ok(total)
}

/// `sum_m a_m (-z)^m B_m^(r)(-y/z)`: the poly-Bernoulli form of the
/// 1/(n+1)^r-weighted series.
pub fn poly_bernoulli_expansion<S: Scalar>(
    f: &TruncatedSeries<S>,
    r: u32,
    y: &S,
    z: &S,
) -> Result<S, SeriesError> {
    if r == 0 {
        return Err(SeriesError::InvalidParameter("order r must be >= 1"));
    }
    if z.is_zero() {
        if !y.is_zero() {
            return Err(SeriesError::InvalidParameter(
                "poly-Bernoulli expansion needs z != 0 when y != 0",
            ));
        }
        return Ok(f.coeff(0));
    }
    let bits = y.prec_bits().max(z.prec_bits());
    let arg = -(y.clone() / z.clone());
    let nz = -z.clone();
    let mut total = S::zero();
    let mut zpow = S::one();
    for m in 0..=f.order() {
        if m > 0 {
            zpow = zpow * nz.clone();
        }
        let a = f.coeff(m);
        if a.is_zero() {
            continue;
        }
        let pb = poly_bernoulli_poly(r, m)
            .map_err(|_| SeriesError::InvalidParameter("order r must be >= 1"))?;
        total = total + a * zpow.clone() * eval_exact_poly_at(&pb, &arg, bits);
    }
    Ok(total)
}

/// Finite double-sum representation of the poly-Bernoulli polynomial:
/// `B_m^(r)(y) = sum_{n=0}^m (n+1)^{-r} sum_k C(n,k)(-1)^k (y-k)^m`.
pub fn poly_bernoulli_poly_rep<S: Scalar>(r: u32, m: usize, y: &S) -> S {
    let bits = y.prec_bits();
    let mut total = S::zero();
    for n in 0..=m {
        let mut sum = S::zero();
        for k in 0..=n {
            let base = y.clone() - S::from_rat(&rat(k as i64), bits);
            let c = S::from_rat(&BigRational::from_integer(binomial(n, k as i64)), bits);
            let term = c * spow(&base, m);
            sum = if k % 2 == 0 { sum + term } else { sum - term };
        }
        let w = BigRational::new(BigInt::one(), BigInt::from(n as i64 + 1).pow(r));
        total = total + sum * S::from_rat(&w, bits);
    }
    total
}

/// Geometric series-transformation closed form:
/// `(1/(1-x)) sum_m a_m z^m omega_m(x/(1-x))` for |x| < 1.
pub fn stf_geo<S: Scalar>(f: &TruncatedSeries<S>, x: &S, z: &S) -> Result<S, SeriesError> {
    if x.approx_f64().abs() >= 1.0 {
        return Err(SeriesError::InvalidParameter("geometric STF needs |x| < 1"));
    }
    let bits = x.prec_bits().max(z.prec_bits());
    let one_minus = S::one() - x.clone();
    let u = x.clone() / one_minus.clone();
    let mut total = S::zero();
    let mut zpow = S::one();
    for m in 0..=f.order() {
        if m > 0 {
            zpow = zpow * z.clone();
        }
        let a = f.coeff(m);
        if a.is_zero() {
            continue;
        }
        total = total + a * zpow.clone() * eval_exact_poly_at(&geom_poly(m), &u, bits);
    }
    Ok(total / one_minus)
}

/// Exponential series-transformation closed form:
/// `e^x sum_m a_m z^m phi_m(x)`.
pub fn stf_exp(f: &TruncatedSeries<Dyadic>, x: &Dyadic, z: &Dyadic) -> Dyadic {
    let bits = x.bits().max(z.bits()).max(64);
    let mut total = Dyadic::zero().with_bits(bits);
    let mut zpow = Dyadic::one().with_bits(bits);
    for m in 0..=f.order() {
        if m > 0 {
            zpow = zpow * z.clone();
        }
        let a = f.coeff(m);
        if Dyadic::is_zero(&a) {
            continue;
        }
        total = total + a * zpow.clone() * exp_poly(m).eval_dyadic(x);
    }
    x.exp() * total
}

/// Partial sums of both sides of the exponential Euler transformation
/// `e^{lx} sum (-x)^n/n! f_n = sum x^n/n! sum_k C(n,k)(-1)^k l^{n-k} f_k`.
/// `f_values[n]` supplies f at the n-th grid point.
pub fn euler_transform_exp(
    f_values: &[Dyadic],
    x: &Dyadic,
    lambda: &Dyadic,
    n_max: usize,
) -> (Vec<Dyadic>, Vec<Dyadic>) {
    assert!(f_values.len() > n_max, "need f values through n_max");
    let bits = (x.bits().max(lambda.bits()).max(64) + n_max as u32 + 32).max(96);
    let x = x.with_bits(bits);
    let lambda = lambda.with_bits(bits);
    let scale = (lambda.clone() * x.clone()).exp();

    let mut lhs = Vec::with_capacity(n_max + 1);
    let mut acc = Dyadic::zero().with_bits(bits);
    let mut pow = Dyadic::one().with_bits(bits); // (-x)^n/n!
    for (n, fv) in f_values.iter().take(n_max + 1).enumerate() {
        if n > 0 {
            pow = (pow * -x.clone()).div_small(n as u64);
        }
        acc = acc + pow.clone() * fv.with_bits(bits);
        lhs.push(scale.clone() * acc.clone());
    }

    let mut rhs = Vec::with_capacity(n_max + 1);
    let mut acc = Dyadic::zero().with_bits(bits);
    let mut xpow = Dyadic::one().with_bits(bits); // x^n/n!
    for n in 0..=n_max {
        if n > 0 {
            xpow = (xpow * x.clone()).div_small(n as u64);
        }
        // inner alternating sum with lambda powers
        let mut inner = Dyadic::zero().with_bits(bits);
        for k in 0..=n {
            let c = Dyadic::from_bigint(binomial(n, k as i64)).with_bits(bits);
            let term = c * lambda.powi((n - k) as i64) * f_values[k].with_bits(bits);
            inner = if k % 2 == 0 { inner + term } else { inner - term };
        }
        acc = acc + xpow.clone() * inner;
        rhs.push(acc.clone());
    }
    (lhs, rhs)
}

/// Partial sums of both sides of the geometric Euler transformation
/// `(1/(1-t)) sum (-1)^n f_n (t/(1-t))^n = sum t^n sum_k C(n,k)(-1)^k f_k`.
pub fn euler_transform_geo(
    f_values: &[Dyadic],
    t: &Dyadic,
    n_max: usize,
) -> Result<(Vec<Dyadic>, Vec<Dyadic>), SeriesError> {
    if t.to_f64().abs() >= 1.0 {
        return Err(SeriesError::InvalidParameter("geometric transform needs |t| < 1"));
    }
    assert!(f_values.len() > n_max, "need f values through n_max");
    let bits = (t.bits().max(64) + n_max as u32 + 32).max(96);
    let t = t.with_bits(bits);
    let one_minus = Dyadic::one().with_bits(bits) - t.clone();
    let u = t.clone().div_bits(&one_minus, bits);
    let scale = Dyadic::one().with_bits(bits).div_bits(&one_minus, bits);

    let mut lhs = Vec::with_capacity(n_max + 1);
    let mut acc = Dyadic::zero().with_bits(bits);
    let mut upow = Dyadic::one().with_bits(bits);
    for (n, fv) in f_values.iter().take(n_max + 1).enumerate() {
        if n > 0 {
            upow = upow * u.clone();
        }
        let term = upow.clone() * fv.with_bits(bits);
        acc = if n % 2 == 0 { acc + term } else { acc - term };
        lhs.push(scale.clone() * acc.clone());
    }

    let mut rhs = Vec::with_capacity(n_max + 1);
    let mut acc = Dyadic::zero().with_bits(bits);
    let mut tpow = Dyadic::one().with_bits(bits);
    for n in 0..=n_max {
        if n > 0 {
            tpow = tpow * t.clone();
        }
        let mut inner = Dyadic::zero().with_bits(bits);
        for k in 0..=n {
            let c = Dyadic::from_bigint(binomial(n, k as i64)).with_bits(bits);
            let term = c * f_values[k].with_bits(bits);
            inner = if k % 2 == 0 { inner + term } else { inner - term };
        }
        acc = acc + tpow.clone() * inner;
        rhs.push(acc.clone());
    }
    Ok((lhs, rhs))
}
