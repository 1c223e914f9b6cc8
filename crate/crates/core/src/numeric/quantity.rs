use std::fmt;

use num_rational::Rational64;

use super::dims::DimSig;
use super::exact::ExactRational;
use super::prec::PrecReal;
use crate::error::{FtrError, Result};

/// A magnitude in cgs-Gaussian base units with its dimension signature.
#[derive(Clone, Debug, PartialEq)]
pub struct Quantity {
    pub mag: PrecReal,
    pub dims: DimSig,
    pub label: String,
}

impl Quantity {
    pub fn new(mag: PrecReal, dims: DimSig) -> Self {
        Quantity {
            mag,
            dims,
            label: String::new(),
        }
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dimensionless(mag: PrecReal) -> Self {
        Self::new(mag, DimSig::dimensionless())
    }

    /// Parses `"<decimal> <unit-expression>"`, e.g. `"1.9e-13 cm"`.
    pub fn parse(s: &str, digits: u32) -> Result<Self> {
        let mut it = s.split_whitespace();
        let num = it.next().ok_or_else(|| parse_err("empty quantity"))?;
        let unit = it.next().unwrap_or("1");
        if it.next().is_some() {
            return Err(parse_err("trailing text after unit"));
        }
        let mag = PrecReal::parse_decimal(num, digits)
            .ok_or_else(|| parse_err(&format!("bad number `{num}`")))?;
        let (scale, dims) = parse_unit(unit, digits)?;
        Ok(Quantity::new(mag * scale, dims))
    }

    pub fn digits(&self) -> u32 {
        self.mag.digits()
    }

    pub fn mul(&self, other: &Quantity) -> Quantity {
        Quantity::new(&self.mag * &other.mag, self.dims + other.dims)
    }

    pub fn div(&self, other: &Quantity) -> Quantity {
        Quantity::new(&self.mag / &other.mag, self.dims - other.dims)
    }

    pub fn add(&self, other: &Quantity) -> Result<Quantity> {
        self.require_same(other)?;
        Ok(Quantity::new(&self.mag + &other.mag, self.dims))
    }

    pub fn sub(&self, other: &Quantity) -> Result<Quantity> {
        self.require_same(other)?;
        Ok(Quantity::new(&self.mag - &other.mag, self.dims))
    }

    pub fn scale(&self, by: &PrecReal) -> Quantity {
        Quantity::new(&self.mag * by, self.dims)
    }

    pub fn scale_ratio(&self, by: &ExactRational) -> Quantity {
        self.scale(&by.to_prec(self.digits()))
    }

    pub fn pow(&self, r: &ExactRational) -> Result<Quantity> {
        let mag = self.mag.pow_ratio(r.as_big())?;
        Ok(Quantity::new(mag, self.dims * to_r64(r)?))
    }

    pub fn powi(&self, n: i64) -> Quantity {
        Quantity::new(self.mag.powi(n), self.dims * Rational64::from_integer(n))
    }

    pub fn sqrt(&self) -> Quantity {
        Quantity::new(self.mag.sqrt(), self.dims * Rational64::new(1, 2))
    }

    pub fn recip(&self) -> Quantity {
        Quantity::new(PrecReal::one(self.digits()) / &self.mag, -self.dims)
    }

    pub fn require_same(&self, other: &Quantity) -> Result<()> {
        if self.dims.same_physical(&other.dims) {
            Ok(())
        } else {
            Err(FtrError::DimensionMismatch {
                left: Box::new(self.dims),
                right: Box::new(other.dims),
            })
        }
    }

    /// Hard failure unless the quantity carries `dims`.
    pub fn expect_dims(&self, dims: DimSig) -> Result<&Self> {
        if self.dims.same_physical(&dims) {
            Ok(self)
        } else {
            Err(FtrError::DimensionMismatch {
                left: Box::new(self.dims),
                right: Box::new(dims),
            })
        }
    }

    /// Magnitude expressed in the given unit expression.
    pub fn in_unit(&self, unit: &str) -> Result<PrecReal> {
        let (scale, dims) = parse_unit(unit, self.digits())?;
        if !dims.same_physical(&self.dims) {
            return Err(FtrError::DimensionMismatch {
                left: Box::new(self.dims),
                right: Box::new(dims),
            });
        }
        Ok(&self.mag / scale)
    }

    pub fn is_positive(&self) -> bool {
        self.mag.is_positive()
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_dimensionless() {
            write!(f, "{}", self.mag.to_sci(6))
        } else {
            write!(f, "{} {}", self.mag.to_sci(6), self.dims)
        }
    }
}

/// Product of two quantities; exponents add exactly.
pub fn qmul(a: &Quantity, b: &Quantity) -> Quantity {
    a.mul(b)
}

/// Sum of two quantities of identical dimension.
pub fn qadd(a: &Quantity, b: &Quantity) -> Result<Quantity> {
    a.add(b)
}

/// Rational power; exponents scale exactly.
pub fn qpow(a: &Quantity, r: &ExactRational) -> Result<Quantity> {
    a.pow(r)
}

fn to_r64(r: &ExactRational) -> Result<Rational64> {
    use num_traits::ToPrimitive;
    let n = r
        .numer()
        .to_i64()
        .ok_or_else(|| FtrError::Domain("exponent numerator too large".into()))?;
    let d = r
        .denom()
        .to_i64()
        .ok_or_else(|| FtrError::Domain("exponent denominator too large".into()))?;
    Ok(Rational64::new(n, d))
}

fn parse_err(msg: &str) -> FtrError {
    FtrError::Parse {
        line: 0,
        message: msg.to_string(),
    }
}

/// Centimetres per megaparsec, fixed.
pub const MPC_IN_CM: &str = "3.0857e24";

/// Erg per electron-volt (exact SI definition of e).
pub const EV_IN_ERG: &str = "1.602176634e-12";

/// Scale factor to cgs base and dimensions of a single base-unit symbol.
fn base_unit(name: &str, digits: u32) -> Option<(PrecReal, DimSig)> {
    let dec = |s: &str| PrecReal::parse_decimal(s, digits).expect("registry literal");
    let one = || PrecReal::one(digits);
    Some(match name {
        "1" => (one(), DimSig::dimensionless()),
        "g" => (one(), DimSig::mass()),
        "kg" => (dec("1e3"), DimSig::mass()),
        "cm" => (one(), DimSig::length()),
        "m" => (dec("1e2"), DimSig::length()),
        "km" => (dec("1e5"), DimSig::length()),
        "fm" => (dec("1e-13"), DimSig::length()),
        "Mpc" => (dec(MPC_IN_CM), DimSig::length()),
        "s" => (one(), DimSig::time()),
        "erg" => (one(), DimSig::energy()),
        "J" => (dec("1e7"), DimSig::energy()),
        "eV" => (dec(EV_IN_ERG), DimSig::energy()),
        "MeV" => (dec(EV_IN_ERG) * dec("1e6"), DimSig::energy()),
        "GeV" => (dec(EV_IN_ERG) * dec("1e9"), DimSig::energy()),
        "dyn" => (one(), DimSig::mlt(1, 1, -2)),
        "esu" => (one(), DimSig::esu()),
        "K" => (one(), DimSig::temperature()),
        _ => return None,
    })
}

/// Parses a dot-separated unit expression such as `cm3.g-1.s-2` or `g1/2`.
pub fn parse_unit(expr: &str, digits: u32) -> Result<(PrecReal, DimSig)> {
    let mut scale = PrecReal::one(digits);
    let mut dims = DimSig::dimensionless();
    if expr.is_empty() {
        return Err(parse_err("empty unit expression"));
    }
    for tok in expr.split('.') {
        let split = tok
            .char_indices()
            .find(|(i, c)| *i > 0 && (c.is_ascii_digit() || *c == '-'))
            .map(|(i, _)| i)
            .unwrap_or(tok.len());
        let (name, exp) = tok.split_at(split);
        let (s, d) =
            base_unit(name, digits).ok_or_else(|| parse_err(&format!("unknown unit `{name}`")))?;
        let e = if exp.is_empty() {
            Rational64::from_integer(1)
        } else {
            parse_exponent(exp).ok_or_else(|| parse_err(&format!("bad exponent in `{tok}`")))?
        };
        let f = s
            .pow_ratio(&num_rational::BigRational::new(
                (*e.numer()).into(),
                (*e.denom()).into(),
            ))
            .map_err(|_| parse_err("bad unit power"))?;
        scale = scale * f;
        dims = dims + d * e;
    }
    Ok((scale, dims))
}

fn parse_exponent(s: &str) -> Option<Rational64> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: i64 = n.parse().ok()?;
    let d: i64 = d.parse().ok()?;
    if d <= 0 {
        return None;
    }
    Some(Rational64::new(n, d))
}
