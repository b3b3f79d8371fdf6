//! Arbitrary-precision dyadic fixed-point reals.
//!
//! A [`Dyadic`] stores `mant * 2^(-bits)`. Addition and subtraction are exact
//! after scale alignment; multiplication and division round to the result
//! scale. This gives controlled *absolute* error, which is what the guarded
//! alternating-sum evaluators need: a sum whose intermediate terms reach
//! `2^n` can be kept accurate by working at `n + guard` fractional bits.
//!
//! Transcendentals (`ln`, `exp`, `pow`) and the constants pi and ln 2 are
//! computed from integer series: pi by a Machin arctangent combination,
//! ln 2 by the atanh series at 1/3. Each routine carries 64 guard bits and
//! rounds back to the requested scale.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

const GUARD: u32 = 64;

#[derive(Clone, Debug)]
pub struct Dyadic {
    mant: BigInt,
    bits: u32,
}

/// Shift a magnitude right by `d` bits, rounding to nearest (ties away from zero).
fn shr_round_mag(mag: &BigUint, d: u32) -> BigUint {
    if d == 0 {
        return mag.clone();
    }
    let half = BigUint::from(1u8) << (d - 1);
    (mag + half) >> d
}

fn shr_round(m: &BigInt, d: u32) -> BigInt {
    if d == 0 || m.is_zero() {
        return m.clone();
    }
    let mag = shr_round_mag(m.magnitude(), d);
    BigInt::from_biguint(m.sign(), mag)
}

/// Nearest-integer division of magnitudes (ties away from zero).
fn div_round_mag(num: &BigUint, den: &BigUint) -> BigUint {
    ((num << 1u8) + den) / (den << 1u8)
}

impl Dyadic {
    pub fn new(mant: BigInt, bits: u32) -> Self {
        Dyadic { mant, bits }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), bits: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::from(1), bits: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic { mant: BigInt::from(n), bits: 0 }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Dyadic { mant: n, bits: 0 }
    }

    /// Rational to dyadic at `bits` fractional bits, rounded to nearest.
    pub fn from_rat(r: &BigRational, bits: u32) -> Self {
        if r.numer().is_zero() {
            return Dyadic { mant: BigInt::zero(), bits };
        }
        let num = r.numer().magnitude() << bits;
        let mag = div_round_mag(&num, r.denom().magnitude());
        Dyadic { mant: BigInt::from_biguint(r.numer().sign(), mag), bits }
    }

    /// Exact conversion: every finite f64 is dyadic.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "cannot build Dyadic from {x}");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let b = x.to_bits();
        let sign = if b >> 63 == 1 { Sign::Minus } else { Sign::Plus };
        let exp_field = ((b >> 52) & 0x7ff) as i64;
        let frac = b & ((1u64 << 52) - 1);
        let (m, e) = if exp_field == 0 {
            (frac, -1074i64) // subnormal
        } else {
            (frac | (1u64 << 52), exp_field - 1075)
        };
        let mant = BigInt::from_biguint(sign, BigUint::from(m));
        if e >= 0 {
            Dyadic { mant: mant << (e as u32), bits: 0 }
        } else {
            Dyadic { mant, bits: (-e) as u32 }
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), bits: self.bits }
    }

    /// Rescale to `bits` fractional bits (rounding when dropping bits).
    pub fn with_bits(&self, bits: u32) -> Self {
        match bits.cmp(&self.bits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Dyadic { mant: &self.mant << (bits - self.bits), bits },
            Ordering::Less => Dyadic { mant: shr_round(&self.mant, self.bits - bits), bits },
        }
    }

    /// Multiply by 2^k (exact; negative k grows the scale).
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.mant.is_zero() {
            return self.clone();
        }
        if k >= 0 {
            Dyadic { mant: &self.mant << (k as usize), bits: self.bits }
        } else {
            Dyadic { mant: self.mant.clone(), bits: self.bits + (-k) as u32 }
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Dyadic { mant: &self.mant * k, bits: self.bits }
    }

    pub fn div_small(&self, k: u64) -> Self {
        let den = BigUint::from(k);
        let mag = div_round_mag(self.mant.magnitude(), &den);
        Dyadic { mant: BigInt::from_biguint(self.mant.sign(), mag), bits: self.bits }
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "dyadic division by zero integer");
        let mag = div_round_mag(self.mant.magnitude(), k.magnitude());
        let sign = if self.mant.sign() == k.sign() { Sign::Plus } else { Sign::Minus };
        let mant = if mag.is_zero() { BigInt::zero() } else { BigInt::from_biguint(sign, mag) };
        Dyadic { mant, bits: self.bits }
    }

    pub fn div_bits(&self, rhs: &Dyadic, out_bits: u32) -> Self {
        assert!(!rhs.mant.is_zero(), "dyadic division by zero");
        if self.mant.is_zero() {
            return Dyadic { mant: BigInt::zero(), bits: out_bits };
        }
        // self/rhs = self.m * 2^(rhs.bits - self.bits) / rhs.m; target scale out_bits
        let shift = out_bits as i64 + rhs.bits as i64 - self.bits as i64;
        let num = if shift >= 0 {
            self.mant.magnitude() << (shift as u32)
        } else {
            shr_round_mag(self.mant.magnitude(), (-shift) as u32)
        };
        let mag = div_round_mag(&num, rhs.mant.magnitude());
        let sign = if self.mant.sign() == rhs.mant.sign() { Sign::Plus } else { Sign::Minus };
        let mant = if mag.is_zero() { BigInt::zero() } else { BigInt::from_biguint(sign, mag) };
        Dyadic { mant, bits: out_bits }
    }

    fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, u32) {
        let bits = a.bits.max(b.bits);
        let ma = if a.bits < bits { &a.mant << (bits - a.bits) } else { a.mant.clone() };
        let mb = if b.bits < bits { &b.mant << (bits - b.bits) } else { b.mant.clone() };
        (ma, mb, bits)
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let mag = self.mant.magnitude();
        let len = mag.bits();
        let (top, shift) = if len > 53 {
            let s = len - 53;
            ((mag >> s).to_u64().unwrap(), s as i64)
        } else {
            (mag.to_u64().unwrap(), 0)
        };
        let e = shift - self.bits as i64;
        let mut v = top as f64;
        // apply 2^e in two steps to dodge intermediate overflow
        if e.abs() > 1000 {
            v *= 2f64.powi((e / 2) as i32);
            v *= 2f64.powi((e - e / 2) as i32);
        } else {
            v *= 2f64.powi(e as i32);
        }
        if self.mant.is_negative() { -v } else { v }
    }

    /// log2 of |value|, or None when zero. Good to ~1e-14 relative.
    pub fn log2_abs(&self) -> Option<f64> {
        if self.mant.is_zero() {
            return None;
        }
        let mag = self.mant.magnitude();
        let len = mag.bits();
        let top = if len > 53 { (mag >> (len - 53)).to_u64().unwrap() } else { mag.to_u64().unwrap() };
        let used = top.max(1).ilog2() as u64 + 1;
        Some((top as f64).log2() + (len - used) as f64 - self.bits as f64)
    }

    pub fn cmp_abs(&self, other: &Dyadic) -> Ordering {
        let (a, b, _) = Dyadic::align(self, other);
        a.magnitude().cmp(b.magnitude())
    }

    /// Decimal string with `sig` significant digits.
    pub fn to_decimal(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.mant.is_zero() {
            return "0".into();
        }
        let neg = self.mant.is_negative();
        let mag = self.mant.magnitude().clone();
        // first estimate of the decimal exponent
        let log10 = (mag.bits() as f64 - 1.0 - self.bits as f64) * std::f64::consts::LOG10_2;
        let mut e10 = log10.floor() as i64;
        let mut digits = String::new();
        for _ in 0..4 {
            let k = sig as i64 - 1 - e10;
            let scaled = if k >= 0 {
                let n = &mag * BigUint::from(10u8).pow(k as u32);
                shr_round_mag(&n, self.bits)
            } else {
                let den = BigUint::from(10u8).pow((-k) as u32) << (self.bits as usize);
                div_round_mag(&mag, &den)
            };
            let s = scaled.to_string();
            if s.len() == sig {
                digits = s;
                break;
            }
            // estimate was off (or rounding carried); adjust and retry
            e10 += s.len() as i64 - sig as i64;
            digits = s;
        }
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if e10 >= 0 && e10 < sig as i64 && e10 <= 16 {
            let ip = (e10 + 1) as usize;
            out.push_str(&digits[..ip.min(digits.len())]);
            if ip < digits.len() {
                out.push('.');
                out.push_str(&digits[ip..]);
            }
        } else if e10 < 0 && e10 >= -6 {
            out.push_str("0.");
            for _ in 0..(-e10 - 1) {
                out.push('0');
            }
            out.push_str(&digits);
        } else {
            out.push_str(&digits[..1]);
            if digits.len() > 1 {
                out.push('.');
                out.push_str(&digits[1..]);
            }
            out.push('e');
            out.push_str(&e10.to_string());
        }
        out
    }

    // ---- constants ----------------------------------------------------

    /// atanh(1/q) scaled by 2^prec, pure integer series.
    fn atanh_recip_scaled(q: u64, prec: u32) -> BigInt {
        let q2 = BigUint::from(q * q);
        let mut x = (BigUint::from(1u8) << prec) / BigUint::from(q);
        let mut sum = x.clone();
        let mut j = 1u64;
        while !x.is_zero() {
            x /= &q2;
            if x.is_zero() {
                break;
            }
            sum += &x / BigUint::from(2 * j + 1);
            j += 1;
        }
        BigInt::from(sum)
    }

    /// atan(1/q) scaled by 2^prec, pure integer series.
    fn atan_recip_scaled(q: u64, prec: u32) -> BigInt {
        let q2 = BigUint::from(q * q);
        let mut x = (BigUint::from(1u8) << prec) / BigUint::from(q);
        let mut sum = BigInt::from(x.clone());
        let mut j = 1u64;
        let mut neg = true;
        while !x.is_zero() {
            x /= &q2;
            if x.is_zero() {
                break;
            }
            let term = BigInt::from(&x / BigUint::from(2 * j + 1));
            if neg {
                sum -= term;
            } else {
                sum += term;
            }
            neg = !neg;
            j += 1;
        }
        sum
    }

    /// pi = 16 atan(1/5) - 4 atan(1/239).
    pub fn pi(bits: u32) -> Dyadic {
        static CACHE: OnceLock<Mutex<(u32, BigInt)>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new((0, BigInt::zero())));
        let mut guard = cache.lock().unwrap();
        if guard.0 < bits || guard.1.is_zero() {
            let wp = bits + GUARD;
            let v = Dyadic::atan_recip_scaled(5, wp) * 16 - Dyadic::atan_recip_scaled(239, wp) * 4;
            *guard = (bits, shr_round(&v, GUARD));
        }
        Dyadic { mant: guard.1.clone(), bits: guard.0 }.with_bits(bits)
    }

    /// ln 2 = 2 atanh(1/3).
    pub fn ln2(bits: u32) -> Dyadic {
        static CACHE: OnceLock<Mutex<(u32, BigInt)>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new((0, BigInt::zero())));
        let mut guard = cache.lock().unwrap();
        if guard.0 < bits || guard.1.is_zero() {
            let wp = bits + GUARD;
            let v = Dyadic::atanh_recip_scaled(3, wp) * 2;
            *guard = (bits, shr_round(&v, GUARD));
        }
        Dyadic { mant: guard.1.clone(), bits: guard.0 }.with_bits(bits)
    }

    // ---- transcendentals ----------------------------------------------

    /// Natural log; requires a strictly positive value.
    pub fn ln(&self) -> Dyadic {
        assert!(self.mant.is_positive(), "ln of non-positive dyadic");
        let bits = self.bits.max(32);
        let wp = bits + GUARD;
        // normalize to y in [1,2)
        let shift = self.mant.bits() as i64 - 1 - self.bits as i64;
        let y = self.with_bits(wp).mul_pow2(-shift);
        let r = y.ln1p_atanh(wp);
        let out = if shift == 0 {
            r
        } else {
            r + Dyadic::ln2(wp).mul_int(&BigInt::from(shift))
        };
        out.with_bits(bits)
    }

    /// ln of self (self in [1,2) expected, but any positive value close to 1 works):
    /// 2 atanh((y-1)/(y+1)) summed at `wp` fractional bits.
    fn ln1p_atanh(&self, wp: u32) -> Dyadic {
        let one = Dyadic::one().with_bits(wp);
        let t = (self.clone() - one.clone()).div_bits(&(self.clone() + one), wp);
        if t.is_zero() {
            return Dyadic { mant: BigInt::zero(), bits: wp };
        }
        let t2 = t.clone() * t.clone();
        let mut pow = t.clone();
        let mut sum = t;
        let mut k = 1u64;
        loop {
            pow = pow * t2.clone();
            if pow.is_zero() {
                break;
            }
            k += 2;
            sum = sum + pow.div_small(k);
        }
        sum.mul_pow2(1)
    }

    /// exp(self). Panics if the result would be astronomically large.
    pub fn exp(&self) -> Dyadic {
        let bits = self.bits.max(32);
        let wp = bits + GUARD;
        if self.mant.is_zero() {
            return Dyadic::one().with_bits(bits);
        }
        let approx = self.to_f64();
        assert!(approx.abs() < 1e6, "exp argument out of supported range");
        let k = (approx / std::f64::consts::LN_2).round() as i64;
        let r = self.with_bits(wp) - Dyadic::ln2(wp).mul_int(&BigInt::from(k));
        // Taylor at |r| <= ln2/2
        let mut term = Dyadic::one().with_bits(wp);
        let mut sum = term.clone();
        let mut j = 1u64;
        loop {
            term = (term * r.clone()).div_small(j);
            if term.is_zero() {
                break;
            }
            sum = sum + term.clone();
            j += 1;
        }
        sum.mul_pow2(k).with_bits(bits)
    }

    /// Integer power by binary exponentiation (n may be negative).
    pub fn powi(&self, n: i64) -> Dyadic {
        let bits = self.bits.max(32);
        if n == 0 {
            return Dyadic::one().with_bits(bits);
        }
        let wp = bits + GUARD;
        let mut base = self.with_bits(wp);
        let mut e = n.unsigned_abs();
        let mut acc = Dyadic::one().with_bits(wp);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
                acc = acc.with_bits(wp);
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
                base = base.with_bits(wp);
            }
        }
        let acc = if n < 0 { Dyadic::one().with_bits(wp).div_bits(&acc, wp) } else { acc };
        acc.with_bits(bits)
    }

    /// Real power: self^p = exp(p ln self); self must be positive.
    pub fn pow(&self, p: &Dyadic) -> Dyadic {
        let bits = self.bits.max(p.bits).max(32);
        let wp = bits + GUARD;
        (self.with_bits(wp).ln() * p.with_bits(wp)).exp().with_bits(bits)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, bits) = Dyadic::align(&self, &rhs);
        Dyadic { mant: a + b, bits }
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        let (a, b, bits) = Dyadic::align(&self, &rhs);
        Dyadic { mant: a - b, bits }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mant: -self.mant, bits: self.bits }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        let bits = self.bits.max(rhs.bits);
        let m = &self.mant * &rhs.mant;
        Dyadic { mant: shr_round(&m, self.bits + rhs.bits - bits), bits }
    }
}

impl Div for Dyadic {
    type Output = Dyadic;
    fn div(self, rhs: Dyadic) -> Dyadic {
        let bits = self.bits.max(rhs.bits);
        self.div_bits(&rhs, bits)
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Dyadic::align(self, other);
        a == b
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = Dyadic::align(self, other);
        Some(a.cmp(&b))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(30))
    }
}
