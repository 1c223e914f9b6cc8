//! Arbitrary-precision reals at an explicit decimal working precision.
//!
//! `PrecReal` wraps an `astro_float::BigFloat` together with the number of
//! decimal digits it is meant to carry. Binary operations run at the larger
//! of the two operand precisions, so a value never silently loses digits by
//! being combined with a lower-precision one.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{FtrError, Result};

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 50;

/// Lowest precision the CLI accepts.
pub const MIN_DIGITS: u32 = 20;

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 32;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

fn bits_for(digits: u32) -> usize {
    // log2(10) = 3.3219...
    (digits as usize * 33220).div_ceil(10000) + GUARD_BITS
}

#[derive(Clone)]
pub struct PrecReal {
    v: BigFloat,
    digits: u32,
}

impl PrecReal {
    fn wrap(v: BigFloat, digits: u32) -> Self {
        PrecReal { v, digits }
    }

    fn p(&self) -> usize {
        bits_for(self.digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Re-rounds to a different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        let mut v = self.v.clone();
        v.set_precision(bits_for(digits), RM).ok();
        PrecReal { v, digits }
    }

    pub fn zero(digits: u32) -> Self {
        Self::from_i64(0, digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::from_i64(1, digits)
    }

    pub fn from_i64(i: i64, digits: u32) -> Self {
        Self::wrap(BigFloat::from_i64(i, bits_for(digits)), digits)
    }

    /// Exact conversion of a binary double.
    pub fn from_f64(f: f64, digits: u32) -> Self {
        Self::wrap(BigFloat::from_f64(f, bits_for(digits)), digits)
    }

    pub fn from_bigint(i: &BigInt, digits: u32) -> Self {
        let p = bits_for(digits);
        let v = with_consts(|cc| BigFloat::parse(&i.to_string(), Radix::Dec, p, RM, cc));
        Self::wrap(v, digits)
    }

    pub fn from_ratio(r: &BigRational, digits: u32) -> Self {
        let n = Self::from_bigint(r.numer(), digits);
        let d = Self::from_bigint(r.denom(), digits);
        n / d
    }

    /// Parses a plain decimal literal such as `-9.10938e-28`.
    ///
    /// The syntax is checked strictly before conversion; the underlying
    /// parser accepts trailing garbage.
    pub fn parse_decimal(s: &str, digits: u32) -> Option<Self> {
        if !is_decimal_literal(s) {
            return None;
        }
        let p = bits_for(digits);
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, p, RM, cc));
        if v.is_nan() {
            None
        } else {
            Some(Self::wrap(v, digits))
        }
    }

    pub fn pi(digits: u32) -> Self {
        let p = bits_for(digits);
        Self::wrap(with_consts(|cc| cc.pi(p, RM)), digits)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_zero() && self.v.is_positive()
    }

    pub fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.digits)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.p(), RM), self.digits)
    }

    pub fn cbrt(&self) -> Self {
        Self::wrap(self.v.cbrt(self.p(), RM), self.digits)
    }

    pub fn ln(&self) -> Self {
        let p = self.p();
        Self::wrap(with_consts(|cc| self.v.ln(p, RM, cc)), self.digits)
    }

    pub fn exp(&self) -> Self {
        let p = self.p();
        Self::wrap(with_consts(|cc| self.v.exp(p, RM, cc)), self.digits)
    }

    pub fn sin(&self) -> Self {
        let p = self.p();
        Self::wrap(with_consts(|cc| self.v.sin(p, RM, cc)), self.digits)
    }

    pub fn cos(&self) -> Self {
        let p = self.p();
        Self::wrap(with_consts(|cc| self.v.cos(p, RM, cc)), self.digits)
    }

    /// Real power `self^e` for positive `self`.
    pub fn powf(&self, e: &PrecReal) -> Self {
        let digits = self.digits.max(e.digits);
        let p = bits_for(digits);
        Self::wrap(with_consts(|cc| self.v.pow(&e.v, p, RM, cc)), digits)
    }

    /// Integer power, exact up to the final rounding for any sign of base.
    pub fn powi(&self, n: i64) -> Self {
        let r = Self::wrap(
            self.v.powi(n.unsigned_abs() as usize, self.p(), RM),
            self.digits,
        );
        if n < 0 {
            Self::one(self.digits) / r
        } else {
            r
        }
    }

    /// Rational power. Integer exponents go through `powi`; anything else
    /// requires a non-negative base.
    pub fn pow_ratio(&self, r: &BigRational) -> Result<Self> {
        if r.is_integer() {
            let n = r
                .to_integer()
                .to_i64()
                .ok_or_else(|| FtrError::Domain("exponent too large".into()))?;
            return Ok(self.powi(n));
        }
        if self.is_negative() {
            return Err(FtrError::NegativeBase);
        }
        if self.is_zero() {
            return if r.is_positive() {
                Ok(Self::zero(self.digits))
            } else {
                Err(FtrError::Domain("zero to a negative power".into()))
            };
        }
        let e = Self::from_ratio(r, self.digits);
        Ok((self.ln() * e).exp())
    }

    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// |self − other| / |other|; absolute difference when `other` is zero.
    pub fn rel_diff(&self, other: &PrecReal) -> PrecReal {
        let d = (self - other).abs();
        if other.is_zero() {
            d
        } else {
            d / other.abs()
        }
    }

    /// `10^-k` at this value's precision.
    pub fn tolerance(digits: u32, k: i64) -> Self {
        Self::from_i64(10, digits).powi(-k)
    }

    pub fn to_f64(&self) -> f64 {
        if self.v.is_nan() {
            return f64::NAN;
        }
        if self.v.is_inf() {
            return if self.v.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        self.to_string().parse().unwrap_or(f64::NAN)
    }

    /// Scientific notation with `sig` significant digits.
    pub fn to_sci(&self, sig: usize) -> String {
        format_sig(self.to_f64(), sig)
    }

    /// Decimal integer part, truncating toward zero.
    pub fn to_bigint(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        let t = self.v.int();
        let s = with_consts(|cc| t.format(Radix::Dec, RM, cc)).ok()?;
        let (mant, exp) = match s.split_once('e') {
            Some((m, e)) => (m.to_string(), e.parse::<i64>().ok()?),
            None => (s.clone(), 0),
        };
        let neg = mant.starts_with('-');
        let mant = mant.trim_start_matches('-');
        let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
        let mut digits = format!("{ip}{fp}");
        let shift = exp - fp.len() as i64;
        if shift >= 0 {
            digits.extend(std::iter::repeat_n('0', shift as usize));
        } else {
            let keep = digits.len() as i64 + shift;
            if keep <= 0 {
                return Some(BigInt::zero());
            }
            digits.truncate(keep as usize);
        }
        let v: BigInt = digits.parse().ok()?;
        Some(if neg { -v } else { v })
    }
}

/// Formats a double in scientific notation with `sig` significant digits.
pub fn format_sig(x: f64, sig: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let sig = sig.max(1);
    format!("{:.*e}", sig - 1, x)
}

/// Rounds a double to `sig` significant digits.
pub fn round_sig(x: f64, sig: usize) -> f64 {
    format_sig(x, sig).parse().unwrap_or(x)
}

fn is_decimal_literal(s: &str) -> bool {
    let b = s.as_bytes();
    let mut i = 0;
    if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
        i += 1;
    }
    let int_start = i;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    let mut n_digits = i - int_start;
    if i < b.len() && b[i] == b'.' {
        i += 1;
        let f = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        n_digits += i - f;
    }
    if n_digits == 0 {
        return false;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        i += 1;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            i += 1;
        }
        let e = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if i == e {
            return false;
        }
    }
    i == b.len()
}

impl fmt::Display for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrecReal({}, {}d)", self.v, self.digits)
    }
}

impl PartialEq for PrecReal {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for PrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&PrecReal> for &PrecReal {
            type Output = PrecReal;
            fn $m(self, rhs: &PrecReal) -> PrecReal {
                let digits = self.digits.max(rhs.digits);
                PrecReal::wrap(self.v.$inner(&rhs.v, bits_for(digits), RM), digits)
            }
        }
        impl $tr<PrecReal> for PrecReal {
            type Output = PrecReal;
            fn $m(self, rhs: PrecReal) -> PrecReal {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PrecReal> for PrecReal {
            type Output = PrecReal;
            fn $m(self, rhs: &PrecReal) -> PrecReal {
                (&self).$m(rhs)
            }
        }
        impl $tr<PrecReal> for &PrecReal {
            type Output = PrecReal;
            fn $m(self, rhs: PrecReal) -> PrecReal {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for PrecReal {
    type Output = PrecReal;
    fn neg(self) -> PrecReal {
        PrecReal::wrap(self.v.neg(), self.digits)
    }
}

impl Neg for &PrecReal {
    type Output = PrecReal;
    fn neg(self) -> PrecReal {
        PrecReal::wrap(self.v.clone().neg(), self.digits)
    }
}
