//! Scalar abstraction shared by the moment engines.
//!
//! Exact sums run in [`BigRational`]; the walk engine at large `n` runs in
//! a real type (`f32`, `f64` or [`HighFloat`]). Every engine is written once
//! against [`Scalar`] and instantiated per type.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::hifloat::HighFloat;

pub trait Scalar:
    Clone
    + Debug
    + Send
    + Sync
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    /// Short type tag used in reports.
    fn kind() -> &'static str;

    fn from_ratio(r: &BigRational) -> Self;

    fn from_biguint(x: &BigUint) -> Self {
        Self::from_ratio(&BigRational::from_integer(BigInt::from(x.clone())))
    }

    fn from_u64(x: u64) -> Self {
        Self::from_biguint(&BigUint::from(x))
    }

    fn to_f64(&self) -> f64;

    /// `base^k`. Exact types multiply out; real types evaluate
    /// `sign^k * exp(k * ln|base|)` so huge `k` costs nothing.
    fn pow_ratio(base: &BigRational, k: u64) -> Self;

    fn powi(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Decimal (or `num/den`) rendering for reports.
    fn render(&self) -> String;
}

/// Real-valued scalars with transcendental functions.
pub trait RealScalar: Scalar {
    fn from_f64(x: f64) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    /// Binary digits of mantissa.
    fn precision_bits() -> u32;
}

fn real_pow_ratio<T: RealScalar>(base: &BigRational, k: u64) -> T {
    if k == 0 {
        return T::one();
    }
    if base.is_zero() {
        return T::zero();
    }
    let magnitude = T::from_ratio(&base.abs());
    let value = (T::from_u64(k) * magnitude.ln()).exp();
    if base.is_negative() && k % 2 == 1 {
        -value
    } else {
        value
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn kind() -> &'static str {
        "exact"
    }

    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ratio_to_f64(self)
    }

    fn pow_ratio(base: &BigRational, k: u64) -> Self {
        let k = u32::try_from(k).expect("exact power exponent exceeds u32");
        BigRational::new_raw(base.numer().pow(k), base.denom().pow(k))
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

/// Division of the leading bits; stays finite for ratios of huge integers.
pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    HighFloat::<128>::from_ratio(r.numer(), r.denom()).to_f64()
}

macro_rules! prim_float {
    ($t:ty, $bits:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn kind() -> &'static str {
                stringify!($t)
            }

            fn from_ratio(r: &BigRational) -> Self {
                ratio_to_f64(r) as $t
            }

            fn from_u64(x: u64) -> Self {
                x as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn pow_ratio(base: &BigRational, k: u64) -> Self {
                real_pow_ratio(base, k)
            }

            fn render(&self) -> String {
                format!("{:e}", self)
            }
        }

        impl RealScalar for $t {
            fn from_f64(x: f64) -> Self {
                x as $t
            }
            fn exp(&self) -> Self {
                <$t>::exp(*self)
            }
            fn ln(&self) -> Self {
                <$t>::ln(*self)
            }
            fn precision_bits() -> u32 {
                $bits
            }
        }
    };
}

prim_float!(f32, 24);
prim_float!(f64, 53);

impl<const BITS: usize> Scalar for HighFloat<BITS> {
    const EXACT: bool = false;

    fn kind() -> &'static str {
        "highfloat"
    }

    fn from_ratio(r: &BigRational) -> Self {
        HighFloat::from_ratio(r.numer(), r.denom())
    }

    fn from_biguint(x: &BigUint) -> Self {
        HighFloat::from_bigint(&BigInt::from(x.clone()))
    }

    fn from_u64(x: u64) -> Self {
        HighFloat::from_u64(x)
    }

    fn to_f64(&self) -> f64 {
        HighFloat::to_f64(self)
    }

    fn pow_ratio(base: &BigRational, k: u64) -> Self {
        real_pow_ratio(base, k)
    }

    fn abs_val(&self) -> Self {
        self.abs()
    }

    fn render(&self) -> String {
        self.to_decimal_string()
    }
}

impl<const BITS: usize> RealScalar for HighFloat<BITS> {
    fn from_f64(x: f64) -> Self {
        HighFloat::from_f64(x)
    }
    fn exp(&self) -> Self {
        HighFloat::exp(self)
    }
    fn ln(&self) -> Self {
        HighFloat::ln(self)
    }
    fn precision_bits() -> u32 {
        BITS as u32
    }
}
