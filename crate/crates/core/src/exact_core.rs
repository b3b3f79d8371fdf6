//! Exact integer/rational arithmetic and the combinatorial tables everything
//! else consumes: binomial coefficients, Stirling numbers of both kinds,
//! Bell numbers.
//!
//! All scalars are arbitrary-precision rationals kept in lowest terms with a
//! positive denominator (the `num-rational` invariants). Tables grow lazily
//! and geometrically; published rows are immutable, so concurrent readers
//! only contend on the short extension critical section.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

/// Arbitrary-precision rational; the exact scalar used across the crate.
pub type ExactRational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("argument out of domain: {0}")]
    Domain(&'static str),
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p/q", "-3", or a plain decimal like "0.25" into an exact rational.
pub fn parse_rational(s: &str) -> Result<ExactRational, ExactError> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().map_err(|_| ExactError::Domain("bad numerator"))?;
        let den: BigInt = q.trim().parse().map_err(|_| ExactError::Domain("bad denominator"))?;
        if den.is_zero() {
            return Err(ExactError::Domain("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.trim_start().starts_with('-');
        let ip_val: BigInt = if ip.is_empty() || ip == "-" {
            BigInt::zero()
        } else {
            ip.parse().map_err(|_| ExactError::Domain("bad integer part"))?
        };
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ExactError::Domain("bad fractional part"));
        }
        let scale = BigInt::from(10u8).pow(fp.len() as u32);
        let fp_val: BigInt = fp.parse().map_err(|_| ExactError::Domain("bad fractional part"))?;
        let mag = ip_val.abs() * &scale + fp_val;
        let signed = if neg { -mag } else { mag };
        return Ok(BigRational::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| ExactError::Domain("bad integer"))?;
    Ok(BigRational::from_integer(n))
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// C(n, k); zero outside 0 <= k <= n.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial C(s, m) = s(s-1)...(s-m+1)/m! for rational s.
pub fn generalized_binomial(s: &ExactRational, m: usize) -> ExactRational {
    let mut acc = BigRational::one();
    for i in 0..m {
        acc *= s - rat(i as i64);
    }
    acc / BigRational::from_integer(factorial(m))
}

// ---- Stirling numbers of the second kind -------------------------------

/// Triangular table of S(m, n), grown on demand.
pub struct StirlingTable2 {
    rows: Mutex<Vec<Arc<Vec<BigInt>>>>,
}

impl StirlingTable2 {
    fn new() -> Self {
        StirlingTable2 { rows: Mutex::new(vec![Arc::new(vec![BigInt::one()])]) }
    }

    pub fn global() -> &'static StirlingTable2 {
        static T: OnceLock<StirlingTable2> = OnceLock::new();
        T.get_or_init(StirlingTable2::new)
    }

    /// Row m: S(m, 0..=m).
    pub fn row(&self, m: usize) -> Arc<Vec<BigInt>> {
        let mut rows = self.rows.lock().unwrap();
        if m >= rows.len() {
            let target = (m + 1).max(rows.len() * 2);
            while rows.len() < target {
                let prev = rows.last().unwrap().clone();
                let p = rows.len(); // building row p
                let mut row = Vec::with_capacity(p + 1);
                row.push(BigInt::zero());
                for n in 1..=p {
                    // S(p, n) = n S(p-1, n) + S(p-1, n-1)
                    let keep = if n < prev.len() { &prev[n] * n } else { BigInt::zero() };
                    row.push(keep + &prev[n - 1]);
                }
                rows.push(Arc::new(row));
            }
        }
        rows[m].clone()
    }
}

/// S(m, n), Stirling number of the second kind; zero outside the triangle.
pub fn stirling2(m: usize, n: usize) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    StirlingTable2::global().row(m)[n].clone()
}

// ---- Stirling numbers of the first kind (signed) ------------------------

/// Triangular table of signed s(p, m): p! C(t, p) = sum_m s(p, m) t^m.
pub struct StirlingTable1 {
    rows: Mutex<Vec<Arc<Vec<BigInt>>>>,
}

impl StirlingTable1 {
    fn new() -> Self {
        StirlingTable1 { rows: Mutex::new(vec![Arc::new(vec![BigInt::one()])]) }
    }

    pub fn global() -> &'static StirlingTable1 {
        static T: OnceLock<StirlingTable1> = OnceLock::new();
        T.get_or_init(StirlingTable1::new)
    }

    pub fn row(&self, p: usize) -> Arc<Vec<BigInt>> {
        let mut rows = self.rows.lock().unwrap();
        if p >= rows.len() {
            let target = (p + 1).max(rows.len() * 2);
            while rows.len() < target {
                let prev = rows.last().unwrap().clone();
                let p = rows.len();
                // s(p, m) = s(p-1, m-1) - (p-1) s(p-1, m)
                let mut row = Vec::with_capacity(p + 1);
                for m in 0..=p {
                    let carry = if m >= 1 { prev[m - 1].clone() } else { BigInt::zero() };
                    let scaled = if m < prev.len() { &prev[m] * (p - 1) } else { BigInt::zero() };
                    row.push(carry - scaled);
                }
                rows.push(Arc::new(row));
            }
        }
        rows[p].clone()
    }
}

/// Signed s(p, m); zero outside the triangle.
pub fn stirling1_signed(p: usize, m: usize) -> BigInt {
    if m > p {
        return BigInt::zero();
    }
    StirlingTable1::global().row(p)[m].clone()
}

// ---- Bell numbers --------------------------------------------------------

pub struct BellSequence;

/// b_n = sum_k S(n, k).
pub fn bell(n: usize) -> BigInt {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut vals = cache.lock().unwrap();
    while vals.len() <= n {
        let m = vals.len();
        let row = StirlingTable2::global().row(m);
        vals.push(row.iter().sum());
    }
    vals[n].clone()
}

/// sum_{n=1}^m S(m,n)(n-1)!(-1)^n: -1 at m = 1, zero for every m > 1.
pub fn lemma2_sum(m: usize) -> Result<BigInt, ExactError> {
    if m == 0 {
        return Err(ExactError::Domain("lemma2_sum requires m >= 1"));
    }
    let row = StirlingTable2::global().row(m);
    let mut fact = BigInt::one(); // (n-1)!
    let mut acc = BigInt::zero();
    for n in 1..=m {
        if n > 1 {
            fact *= BigInt::from(n - 1);
        }
        let term = &row[n] * &fact;
        if n % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Defining alternating sum: S(m,n) = ((-1)^n/n!) sum_k C(n,k)(-1)^k k^m.
    fn stirling2_bruteforce(m: usize, n: usize) -> BigInt {
        let mut acc = BigInt::zero();
        for k in 0..=n {
            let t = binomial(n, k as i64) * BigInt::from(k).pow(m as u32);
            if k % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        let signed = if n % 2 == 0 { acc } else { -acc };
        let f = factorial(n);
        assert!((&signed % &f).is_zero());
        signed / f
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(2, 3), int(0));
        assert_eq!(stirling2(3, 2), stirling2_bruteforce(3, 2));
        assert_eq!(stirling2(3, 2), int(3));
    }

    #[test]
    fn stirling2_matches_alternating_sum() {
        for m in 0..=15 {
            for n in 0..=m {
                assert_eq!(stirling2(m, n), stirling2_bruteforce(m, n), "S({m},{n})");
            }
        }
    }

    #[test]
    fn stirling2_row_sums_are_bell() {
        for n in 0..=25 {
            let row = StirlingTable2::global().row(n);
            let sum: BigInt = row.iter().sum();
            assert_eq!(sum, bell(n));
        }
        assert_eq!(bell(0), int(1));
        assert_eq!(bell(3), int(5));
        assert_eq!(bell(5), int(52));
    }

    #[test]
    fn bell_strictly_increasing() {
        for n in 1..25 {
            assert!(bell(n + 1) > bell(n));
        }
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(stirling1_signed(0, 0), int(1));
        // t(t-1)/2 = (-t + t^2)/2
        assert_eq!(stirling1_signed(2, 1), int(-1));
        // t(t-1)(t-2) = t^3 - 3t^2 + 2t
        assert_eq!(stirling1_signed(3, 2), int(-3));
        assert_eq!(stirling1_signed(3, 1), int(2));
        assert_eq!(stirling1_signed(2, 3), int(0));
    }

    /// C(t, p) as the falling-factorial product.
    fn choose_poly(t: &ExactRational, p: usize) -> ExactRational {
        generalized_binomial(t, p)
    }

    #[test]
    fn stirling1_reproduces_binomial_polynomial() {
        // (1/p!) sum_m s(p,m) t^m = C(t,p) for random rational t
        let mut rng = crate::suites_rng(7);
        for p in 0..=12usize {
            for _ in 0..20 {
                let t = crate::random_rational(&mut rng, 40, 12);
                let mut acc = BigRational::zero();
                let mut tp = BigRational::one();
                let row = StirlingTable1::global().row(p);
                for m in 0..=p {
                    acc += BigRational::from_integer(row[m].clone()) * &tp;
                    tp *= &t;
                }
                acc /= BigRational::from_integer(factorial(p));
                assert_eq!(acc, choose_poly(&t, p), "p={p} t={t}");
            }
        }
    }

    #[test]
    fn lemma2_values() {
        assert_eq!(lemma2_sum(1).unwrap(), int(-1));
        assert_eq!(lemma2_sum(2).unwrap(), int(0));
        assert_eq!(lemma2_sum(7).unwrap(), int(0));
        for m in 2..=30 {
            assert_eq!(lemma2_sum(m).unwrap(), int(0), "m={m}");
        }
        assert!(lemma2_sum(0).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(5, 6), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn generalized_binomial_values() {
        assert_eq!(generalized_binomial(&rat(-2), 3), rat(-4));
        assert_eq!(generalized_binomial(&ratio(1, 2), 2), ratio(-1, 8));
        assert_eq!(generalized_binomial(&ratio(7, 3), 0), rat(1));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("2.5").unwrap(), ratio(5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    proptest! {
        #[test]
        fn binomial_symmetry(n in 0usize..40, k in 0i64..40) {
            prop_assume!(k as usize <= n);
            prop_assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
        }

        #[test]
        fn generalized_matches_integer_binomial(n in 0i64..20, m in 0usize..20) {
            let g = generalized_binomial(&rat(n), m);
            prop_assert!(g.is_integer());
            prop_assert_eq!(g.to_integer(), binomial(n as usize, m as i64));
        }
    }
}
