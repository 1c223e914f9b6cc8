use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::prec::PrecReal;

/// Exact non-negative integer count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn new(v: impl Into<BigUint>) -> Self {
        BigCount(v.into())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn pow2(exp: u32) -> Self {
        BigCount(BigUint::one() << exp)
    }

    pub fn to_prec(&self, digits: u32) -> PrecReal {
        PrecReal::from_bigint(&BigInt::from(self.0.clone()), digits)
    }

    /// `n choose k`, exact.
    pub fn binomial(n: u64, k: u64) -> Self {
        if k > n {
            return BigCount(BigUint::zero());
        }
        let k = k.min(n - k);
        let mut acc = BigUint::one();
        for i in 0..k {
            acc *= BigUint::from(n - i);
            acc /= BigUint::from(i + 1);
        }
        BigCount(acc)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Mul for &BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl Add for &BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

/// Reduced fraction with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(num: i64, den: i64) -> Self {
        ExactRational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_big(r: BigRational) -> Self {
        ExactRational(r)
    }

    pub fn integer(n: i64) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn recip(&self) -> Self {
        ExactRational(self.0.recip())
    }

    pub fn pow(&self, n: i32) -> Self {
        ExactRational(num_traits::Pow::pow(&self.0, n))
    }

    pub fn to_prec(&self, digits: u32) -> PrecReal {
        PrecReal::from_ratio(&self.0, digits)
    }

    /// `gcd(|num|, den) == 1` and `den > 0`.
    pub fn is_reduced(&self) -> bool {
        self.0.denom() > &BigInt::zero() && self.0.numer().gcd(self.0.denom()).is_one()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! rat_op {
    ($tr:ident, $m:ident) => {
        impl $tr for &ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$m(rhs.0))
            }
        }
    };
}

rat_op!(Add, add);
rat_op!(Sub, sub);
rat_op!(Mul, mul);
rat_op!(Div, div);

/// The conversion factor between the theoretical and observational systems.
pub fn beta() -> ExactRational {
    ExactRational::new(137, 136)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let r = ExactRational::new(272, -274);
        assert!(r.is_reduced());
        assert_eq!(r, ExactRational::new(-136, 137));
        assert_eq!(format!("{}", beta()), "137/136");
        assert_eq!(
            &beta() * &ExactRational::integer(136),
            ExactRational::integer(137)
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(BigCount::binomial(7, 2), BigCount::new(21u32));
        assert_eq!(BigCount::binomial(5, 2), BigCount::new(10u32));
        assert_eq!(BigCount::binomial(3, 5), BigCount::new(0u32));
        assert_eq!(BigCount::binomial(300, 150).0.bits(), 296);
    }

    #[test]
    fn holds_2_to_300() {
        let n = BigCount::pow2(300);
        assert_eq!(n.0.bits(), 301);
        let p = n.to_prec(120);
        assert_eq!(p.to_bigint().unwrap(), BigInt::from(n.0.clone()));
    }
}
