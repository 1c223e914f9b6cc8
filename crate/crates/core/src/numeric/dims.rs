use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

/// Dimension signature in the cgs-Gaussian base (g, cm, s) plus charge and
/// temperature. Exponents are exact rationals; the esu carries half-integer
/// mass and length exponents.
///
/// `index` is the optional Eddington dimension-index: the single integer
/// power of the extraneous length standard. It is bookkeeping only and does
/// not take part in equality of physical dimensions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DimSig {
    pub mass: Rational64,
    pub length: Rational64,
    pub time: Rational64,
    pub charge: Rational64,
    pub temperature: Rational64,
    pub index: Option<i32>,
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

impl DimSig {
    pub const fn dimensionless() -> Self {
        DimSig {
            mass: Rational64::new_raw(0, 1),
            length: Rational64::new_raw(0, 1),
            time: Rational64::new_raw(0, 1),
            charge: Rational64::new_raw(0, 1),
            temperature: Rational64::new_raw(0, 1),
            index: None,
        }
    }

    pub fn mlt(mass: i64, length: i64, time: i64) -> Self {
        DimSig {
            mass: r(mass),
            length: r(length),
            time: r(time),
            ..Self::dimensionless()
        }
    }

    pub fn mass() -> Self {
        Self::mlt(1, 0, 0)
    }

    pub fn length() -> Self {
        Self::mlt(0, 1, 0)
    }

    pub fn time() -> Self {
        Self::mlt(0, 0, 1)
    }

    pub fn velocity() -> Self {
        Self::mlt(0, 1, -1)
    }

    pub fn momentum() -> Self {
        Self::mlt(1, 1, -1)
    }

    pub fn energy() -> Self {
        Self::mlt(1, 2, -2)
    }

    /// erg·s
    pub fn action() -> Self {
        Self::mlt(1, 2, -1)
    }

    pub fn temperature() -> Self {
        DimSig {
            temperature: r(1),
            ..Self::dimensionless()
        }
    }

    /// Gaussian charge: g^1/2 cm^3/2 s^-1.
    pub fn esu() -> Self {
        DimSig {
            mass: Rational64::new(1, 2),
            length: Rational64::new(3, 2),
            time: r(-1),
            ..Self::dimensionless()
        }
    }

    pub fn with_index(mut self, index: i32) -> Self {
        self.index = Some(index);
        self
    }

    /// Physical equality, ignoring the dimension-index tag.
    pub fn same_physical(&self, other: &DimSig) -> bool {
        self.mass == other.mass
            && self.length == other.length
            && self.time == other.time
            && self.charge == other.charge
            && self.temperature == other.temperature
    }

    pub fn is_dimensionless(&self) -> bool {
        self.same_physical(&DimSig::dimensionless())
    }

    pub fn scale(&self, by: Rational64) -> DimSig {
        DimSig {
            mass: self.mass * by,
            length: self.length * by,
            time: self.time * by,
            charge: self.charge * by,
            temperature: self.temperature * by,
            index: self.index.and_then(|i| {
                let v = Rational64::from_integer(i as i64) * by;
                v.is_integer().then(|| *v.numer() as i32)
            }),
        }
    }

    /// Folds the charge exponent into g/cm/s using esu = g^1/2 cm^3/2 s^-1.
    pub fn reduce_charge(&self) -> DimSig {
        let q = self.charge;
        DimSig {
            mass: self.mass + q * Rational64::new(1, 2),
            length: self.length + q * Rational64::new(3, 2),
            time: self.time - q,
            charge: Rational64::zero(),
            ..*self
        }
    }
}

impl Add for DimSig {
    type Output = DimSig;
    fn add(self, o: DimSig) -> DimSig {
        DimSig {
            mass: self.mass + o.mass,
            length: self.length + o.length,
            time: self.time + o.time,
            charge: self.charge + o.charge,
            temperature: self.temperature + o.temperature,
            index: match (self.index, o.index) {
                (Some(a), Some(b)) => Some(a + b),
                (a, None) => a,
                (None, b) => b,
            },
        }
    }
}

impl Neg for DimSig {
    type Output = DimSig;
    fn neg(self) -> DimSig {
        self.scale(r(-1))
    }
}

impl Sub for DimSig {
    type Output = DimSig;
    fn sub(self, o: DimSig) -> DimSig {
        self + (-o)
    }
}

impl Mul<Rational64> for DimSig {
    type Output = DimSig;
    fn mul(self, by: Rational64) -> DimSig {
        self.scale(by)
    }
}

impl fmt::Display for DimSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [
            ("g", self.mass),
            ("cm", self.length),
            ("s", self.time),
            ("Q", self.charge),
            ("K", self.temperature),
        ] {
            if e.is_zero() {
                continue;
            }
            if e == r(1) {
                parts.push(name.to_string());
            } else if e.is_integer() {
                parts.push(format!("{name}{}", e.numer()));
            } else {
                parts.push(format!("{name}{}/{}", e.numer(), e.denom()));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("."))
        }
    }
}

impl fmt::Debug for DimSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "[{self}; l={i}]"),
            None => write!(f, "[{self}]"),
        }
    }
}

impl Serialize for DimSig {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
