//! Scalar abstraction shared by the series machinery: the same transform
//! code runs over exact rationals (identity checking) and over guarded
//! dyadic fixed-point or f64 values (numeric evaluation).

use crate::dyadic::Dyadic;
use crate::exact_core::ExactRational;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Sub<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Build from an exact rational. `prec_bits` is honored by inexact
    /// scalars and ignored by exact ones.
    fn from_rat(r: &ExactRational, prec_bits: u32) -> Self;
    /// Working precision carried by the value (0 for exact scalars and f64).
    fn prec_bits(&self) -> u32;
    fn approx_f64(&self) -> f64;
}

impl Scalar for BigRational {
    fn from_rat(r: &ExactRational, _prec_bits: u32) -> Self {
        r.clone()
    }
    fn prec_bits(&self) -> u32 {
        0
    }
    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_rat(r: &ExactRational, _prec_bits: u32) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
    fn prec_bits(&self) -> u32 {
        0
    }
    fn approx_f64(&self) -> f64 {
        *self
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic::zero()
    }
    fn is_zero(&self) -> bool {
        Dyadic::is_zero(self)
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Dyadic::one()
    }
}

impl Scalar for Dyadic {
    fn from_rat(r: &ExactRational, prec_bits: u32) -> Self {
        Dyadic::from_rat(r, prec_bits.max(64))
    }
    fn prec_bits(&self) -> u32 {
        self.bits()
    }
    fn approx_f64(&self) -> f64 {
        self.to_f64()
    }
}

/// Scalars that additionally support exp/ln/pow; required by the series
/// providers whose direct evaluators are transcendental.
pub trait Transcendental: Scalar {
    fn exp_(&self) -> Self;
    /// Natural log; caller guarantees a positive argument.
    fn ln_(&self) -> Self;
    fn pow_(&self, p: &Self) -> Self;
}

impl Transcendental for f64 {
    fn exp_(&self) -> Self {
        self.exp()
    }
    fn ln_(&self) -> Self {
        self.ln()
    }
    fn pow_(&self, p: &Self) -> Self {
        self.powf(*p)
    }
}

impl Transcendental for Dyadic {
    fn exp_(&self) -> Self {
        self.exp()
    }
    fn ln_(&self) -> Self {
        self.ln()
    }
    fn pow_(&self, p: &Self) -> Self {
        self.pow(p)
    }
}

/// x^n by repeated multiplication.
pub fn spow<S: Scalar>(x: &S, n: usize) -> S {
    let mut acc = S::one();
    for _ in 0..n {
        acc = acc * x.clone();
    }
    acc
}
