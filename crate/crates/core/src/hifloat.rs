//! Fixed-precision binary floating point backed by `astro-float`.
//!
//! `HighFloat<BITS>` carries its precision in the type so that `Zero`/`One`
//! and the arithmetic operators need no runtime context. All operations
//! round to nearest, ties to even.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::{BigInt, Sign as IntSign};
use num_traits::{One, Zero};

const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BITS: usize = Word::BITS as usize;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// A real number with `BITS` bits of binary mantissa.
#[derive(Clone)]
pub struct HighFloat<const BITS: usize>(BigFloat);

impl<const BITS: usize> HighFloat<BITS> {
    pub const PRECISION: usize = BITS;

    fn wrap(v: BigFloat) -> Self {
        debug_assert!(!v.is_nan(), "HighFloat produced NaN");
        HighFloat(v)
    }

    pub fn from_f64(x: f64) -> Self {
        Self::wrap(BigFloat::from_f64(x, BITS))
    }

    pub fn from_u64(x: u64) -> Self {
        Self::wrap(BigFloat::from_u64(x, BITS))
    }

    pub fn from_i64(x: i64) -> Self {
        Self::wrap(BigFloat::from_i64(x, BITS))
    }

    /// Correctly rounded conversion of an arbitrary integer.
    pub fn from_bigint(x: &BigInt) -> Self {
        Self::wrap(exact_bigfloat(x)).rounded()
    }

    /// `num / den` rounded once to `BITS`.
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        let n = exact_bigfloat(num);
        let d = exact_bigfloat(den);
        Self::wrap(n.div(&d, BITS, RM))
    }

    fn rounded(mut self) -> Self {
        self.0.set_precision(BITS, RM).expect("set precision");
        self
    }

    pub fn exp(&self) -> Self {
        with_consts(|cc| Self::wrap(self.0.exp(BITS, RM, cc)))
    }

    pub fn ln(&self) -> Self {
        with_consts(|cc| Self::wrap(self.0.ln(BITS, RM, cc)))
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        let Some((words, _, sign, exp, _)) = self.0.as_raw_parts() else {
            return f64::NAN;
        };
        // mantissa is normalised: value = 0.m * 2^exp, top word holds the leading bits
        let top = *words.last().expect("non-empty mantissa") as f64;
        let v = top * 2f64.powi(exp - WORD_BITS as i32);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    /// Decimal rendering with enough digits to round-trip `BITS` bits.
    pub fn to_decimal_string(&self) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        with_consts(|cc| {
            let digits = (BITS as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1;
            let mut v = self.0.clone();
            // format() prints the full binary mantissa, trim to the declared precision
            v.set_precision(BITS, RM).expect("set precision");
            let s = v.format(Radix::Dec, RM, cc).expect("format");
            trim_mantissa(&s, digits)
        })
    }
}

fn exact_bigfloat(x: &BigInt) -> BigFloat {
    let (sign, digits) = x.to_u64_digits();
    if digits.is_empty() {
        return BigFloat::from_u64(0, WORD_BITS);
    }
    let words: Vec<Word> = digits.iter().map(|&d| d as Word).collect();
    let exp = (words.len() * WORD_BITS) as i32;
    let s = if sign == IntSign::Minus { Sign::Neg } else { Sign::Pos };
    BigFloat::from_words(&words, s, exp)
}

fn trim_mantissa(s: &str, digits: usize) -> String {
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], &s[pos..]),
        None => (s, ""),
    };
    let mut out = String::new();
    let mut count = 0;
    for ch in mant.chars() {
        if ch.is_ascii_digit() {
            if count >= digits {
                continue;
            }
            count += 1;
        }
        out.push(ch);
    }
    out.push_str(exp);
    out
}

impl<const BITS: usize> fmt::Debug for HighFloat<BITS> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HighFloat<{}>({})", BITS, self.to_decimal_string())
    }
}

impl<const BITS: usize> fmt::Display for HighFloat<BITS> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl<const BITS: usize> PartialEq for HighFloat<BITS> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<const BITS: usize> PartialOrd for HighFloat<BITS> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl<const BITS: usize> $trait for HighFloat<BITS> {
            type Output = Self;
            fn $method(self, rhs: Self) -> Self {
                Self::wrap(self.0.$method(&rhs.0, BITS, RM))
            }
        }
        impl<'a, const BITS: usize> $trait<&'a HighFloat<BITS>> for &'a HighFloat<BITS> {
            type Output = HighFloat<BITS>;
            fn $method(self, rhs: &'a HighFloat<BITS>) -> HighFloat<BITS> {
                HighFloat::wrap(self.0.$method(&rhs.0, BITS, RM))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl<const BITS: usize> Neg for HighFloat<BITS> {
    type Output = Self;
    fn neg(self) -> Self {
        HighFloat(self.0.neg())
    }
}

impl<const BITS: usize> Zero for HighFloat<BITS> {
    fn zero() -> Self {
        Self::from_u64(0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<const BITS: usize> One for HighFloat<BITS> {
    fn one() -> Self {
        Self::from_u64(1)
    }
}
