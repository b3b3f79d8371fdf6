//! The exact polynomial and number families: exponential polynomials phi_m,
//! geometric polynomials omega_m, Bernoulli numbers/polynomials, Kaneko's
//! poly-Bernoulli numbers/polynomials, and Euler numbers/polynomials.
//!
//! Convention: B_1 = -1/2. This is forced by the Stirling-number
//! representation `B_m = sum_j S(m,j) j! (-1)^j/(j+1)` used throughout; note
//! that several references use the opposite sign for B_1.

use crate::dyadic::Dyadic;
use crate::exact_core::{binomial, rat, ExactError, ExactRational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Dense exact polynomial; `coeffs[i]` multiplies x^i, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialExact {
    coeffs: Vec<ExactRational>,
}

impl PolynomialExact {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolynomialExact { coeffs }
    }

    pub fn zero() -> Self {
        PolynomialExact { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        PolynomialExact::new(vec![c])
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn eval_dyadic(&self, x: &Dyadic) -> Dyadic {
        let bits = x.bits().max(32);
        let mut acc = Dyadic::zero().with_bits(bits);
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + Dyadic::from_rat(c, bits);
        }
        acc
    }
}

/// Free-function form of exact evaluation.
pub fn poly_eval(p: &PolynomialExact, x: &ExactRational) -> ExactRational {
    p.eval(x)
}

/// Exponential polynomial phi_m(x) = sum_n S(m,n) x^n.
pub fn exp_poly(m: usize) -> PolynomialExact {
    let row = crate::exact_core::StirlingTable2::global().row(m);
    PolynomialExact::new(row.iter().map(|s| BigRational::from_integer(s.clone())).collect())
}

/// Geometric polynomial omega_m(x) = sum_n S(m,n) n! x^n.
pub fn geom_poly(m: usize) -> PolynomialExact {
    let row = crate::exact_core::StirlingTable2::global().row(m);
    let mut fact = BigInt::one();
    let coeffs = row
        .iter()
        .enumerate()
        .map(|(n, s)| {
            if n > 1 {
                fact *= BigInt::from(n);
            }
            BigRational::from_integer(s * &fact)
        })
        .collect();
    PolynomialExact::new(coeffs)
}

fn bernoulli_cache() -> &'static Mutex<Vec<ExactRational>> {
    static C: OnceLock<Mutex<Vec<ExactRational>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(Vec::new()))
}

/// B_m with B_1 = -1/2, by the Stirling-number representation.
pub fn bernoulli_number(m: usize) -> ExactRational {
    let mut cache = bernoulli_cache().lock().unwrap();
    while cache.len() <= m {
        let n = cache.len();
        let row = crate::exact_core::StirlingTable2::global().row(n);
        let mut fact = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, s) in row.iter().enumerate() {
            if j > 1 {
                fact *= BigInt::from(j);
            }
            let t = BigRational::new(s * &fact, BigInt::from(j as i64 + 1));
            if j % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        cache.push(acc);
    }
    cache[m].clone()
}

/// B_m(y) = sum_j C(m,j) y^{m-j} B_j.
pub fn bernoulli_poly(m: usize) -> PolynomialExact {
    let mut coeffs = vec![BigRational::zero(); m + 1];
    for j in 0..=m {
        coeffs[m - j] = BigRational::from_integer(binomial(m, j as i64)) * bernoulli_number(j);
    }
    PolynomialExact::new(coeffs)
}

fn poly_bernoulli_cache() -> &'static Mutex<HashMap<u32, Vec<ExactRational>>> {
    static C: OnceLock<Mutex<HashMap<u32, Vec<ExactRational>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Kaneko's poly-Bernoulli number B_n^(q) via the Stirling representation
/// B_n^(q) = (-1)^n sum_j S(n,j) j! (-1)^j/(j+1)^q.
pub fn poly_bernoulli_number(q: u32, n: usize) -> Result<ExactRational, ExactError> {
    if q == 0 {
        return Err(ExactError::Domain("poly-Bernoulli order q must be >= 1"));
    }
    let mut map = poly_bernoulli_cache().lock().unwrap();
    let list = map.entry(q).or_default();
    while list.len() <= n {
        let m = list.len();
        let row = crate::exact_core::StirlingTable2::global().row(m);
        let mut fact = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, s) in row.iter().enumerate() {
            if j > 1 {
                fact *= BigInt::from(j);
            }
            let t = BigRational::new(s * &fact, BigInt::from(j as i64 + 1).pow(q));
            if j % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        if m % 2 == 1 {
            acc = -acc;
        }
        list.push(acc);
    }
    Ok(list[n].clone())
}

/// B_m^(q)(y) = sum_j C(m,j) y^{m-j} B_j^(q).
pub fn poly_bernoulli_poly(q: u32, m: usize) -> Result<PolynomialExact, ExactError> {
    let mut coeffs = vec![BigRational::zero(); m + 1];
    for j in 0..=m {
        coeffs[m - j] =
            BigRational::from_integer(binomial(m, j as i64)) * poly_bernoulli_number(q, j)?;
    }
    Ok(PolynomialExact::new(coeffs))
}

/// omega_m(-1/2) in closed form: 2 (1 - 2^{m+1}) B_{m+1} / (m+1).
pub fn geom_poly_half_identity(m: usize) -> ExactRational {
    let two_pow = BigRational::from_integer(BigInt::from(2).pow(m as u32 + 1));
    (rat(1) - two_pow) * bernoulli_number(m + 1) * rat(2) / rat(m as i64 + 1)
}

/// E_m(x) = sum_k C(m,k) omega_k(-1/2) x^{m-k}.
pub fn euler_poly(m: usize) -> PolynomialExact {
    let neg_half = -rat(1) / rat(2);
    let mut coeffs = vec![BigRational::zero(); m + 1];
    for k in 0..=m {
        coeffs[m - k] =
            BigRational::from_integer(binomial(m, k as i64)) * geom_poly(k).eval(&neg_half);
    }
    PolynomialExact::new(coeffs)
}

/// Euler number E_m = 2^m E_m(1/2); zero for odd m.
pub fn euler_number(m: usize) -> ExactRational {
    static C: OnceLock<Mutex<Vec<ExactRational>>> = OnceLock::new();
    let cache = C.get_or_init(|| Mutex::new(Vec::new()));
    let mut vals = cache.lock().unwrap();
    while vals.len() <= m {
        let n = vals.len();
        let half = rat(1) / rat(2);
        let v = euler_poly(n).eval(&half) * BigRational::from_integer(BigInt::from(2).pow(n as u32));
        vals.push(v);
    }
    vals[m].clone()
}
