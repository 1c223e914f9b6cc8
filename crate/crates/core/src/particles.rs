//! Carriers, extracule/intracule reduction and the conversions between
//! system A (standard-particle uranoid, bound intracules) and system B
//! (hydrocule uranoid, free intracules).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{FtrError, Result};
use crate::numeric::{beta, ConstantSet, DimSig, ExactRational, PrecReal, Quantity};

pub const CARRIER_MULTIPLICITIES: [u32; 6] = [1, 3, 4, 10, 136, 137];

/// A carrier V_k together with the characteristics frozen on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    k: u32,
    stabilized: BTreeSet<String>,
}

impl Carrier {
    pub fn new(k: u32) -> Result<Self> {
        if !CARRIER_MULTIPLICITIES.contains(&k) {
            return Err(FtrError::Domain(format!(
                "no carrier with multiplicity {k}"
            )));
        }
        Ok(Carrier {
            k,
            stabilized: BTreeSet::new(),
        })
    }

    pub fn multiplicity(&self) -> u32 {
        self.k
    }

    pub fn label(&self) -> String {
        format!("V{}", self.k)
    }

    /// Freezes a named characteristic, removing one degree of freedom.
    pub fn stabilize(&mut self, name: &str) -> Result<()> {
        if self.stabilized.len() as u32 >= self.k {
            return Err(FtrError::Domain(format!(
                "{} has no free characteristic left",
                self.label()
            )));
        }
        if !self.stabilized.insert(name.to_string()) {
            return Err(FtrError::DuplicateName(name.to_string()));
        }
        Ok(())
    }

    pub fn stabilized(&self) -> impl Iterator<Item = &str> {
        self.stabilized.iter().map(String::as_str)
    }

    pub fn effective_multiplicity(&self) -> u32 {
        self.k - self.stabilized.len() as u32
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoParticle {
    pub m: Quantity,
    pub m_prime: Quantity,
}

impl TwoParticle {
    pub fn new(m: Quantity, m_prime: Quantity) -> Result<Self> {
        m.expect_dims(DimSig::mass())?;
        m_prime.expect_dims(DimSig::mass())?;
        if !m.is_positive() || !m_prime.is_positive() {
            return Err(FtrError::NonPositiveInput("particle mass".into()));
        }
        Ok(TwoParticle { m, m_prime })
    }
}

/// Extracule mass M = m + m′ and intracule mass μ = m m′ / (m + m′).
pub fn reduce_two_particle(p: &TwoParticle) -> Result<(Quantity, Quantity)> {
    let total = p.m.add(&p.m_prime)?;
    let mu = p.m.mul(&p.m_prime).div(&total);
    Ok((total.labeled("M"), mu.labeled("mu")))
}

/// Roots of m² − m M₁ + M₁ μ = 0, heavier first.
pub fn two_particle_roots(m1: &Quantity, mu: &Quantity) -> Result<(Quantity, Quantity)> {
    m1.require_same(mu)?;
    let four = PrecReal::from_i64(4, m1.digits());
    let disc = &m1.mag * &m1.mag - four * &m1.mag * &mu.mag;
    if disc.is_negative() {
        return Err(FtrError::ComplexRoots);
    }
    let two = PrecReal::from_i64(2, m1.digits());
    let s = disc.sqrt();
    let heavy = (&m1.mag + &s) / &two;
    // product form keeps the small root accurate when μ ≪ M₁
    let light = if heavy.is_zero() {
        heavy.clone()
    } else {
        &m1.mag * &mu.mag / &heavy
    };
    Ok((Quantity::new(heavy, m1.dims), Quantity::new(light, m1.dims)))
}

/// Rest mass of the hydrocule, β m₀.
pub fn hydrocule_rest(m0: &Quantity) -> Result<Quantity> {
    if !m0.is_positive() {
        return Err(FtrError::NonPositiveInput("m0".into()));
    }
    Ok(m0.scale_ratio(&beta()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemTag {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    AToB,
    BToA,
}

/// Quantity classes with a known β exponent for A → B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuantityClass {
    Length,
    Time,
    IntraculeMass,
    ExtraculeMassDensity,
}

impl QuantityClass {
    pub fn beta_exponent(self) -> ExactRational {
        match self {
            QuantityClass::Length | QuantityClass::Time => ExactRational::new(-1, 6),
            QuantityClass::IntraculeMass => ExactRational::new(1, 2),
            QuantityClass::ExtraculeMassDensity => ExactRational::integer(1),
        }
    }
}

impl FromStr for QuantityClass {
    type Err = FtrError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "length" => QuantityClass::Length,
            "time" => QuantityClass::Time,
            "intracule-mass" => QuantityClass::IntraculeMass,
            "extracule-mass-density" => QuantityClass::ExtraculeMassDensity,
            _ => return Err(FtrError::UnknownClass(s.to_string())),
        })
    }
}

impl fmt::Display for QuantityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuantityClass::Length => "length",
            QuantityClass::Time => "time",
            QuantityClass::IntraculeMass => "intracule-mass",
            QuantityClass::ExtraculeMassDensity => "extracule-mass-density",
        })
    }
}

/// Multiplies `q` by β^{±exponent}.
pub fn beta_scale(q: &Quantity, exponent: &ExactRational, dir: Direction) -> Result<Quantity> {
    let e = match dir {
        Direction::AToB => exponent.clone(),
        Direction::BToA => &ExactRational::integer(0) - exponent,
    };
    let factor = beta().to_prec(q.digits()).pow_ratio(e.as_big())?;
    Ok(q.scale(&factor))
}

pub fn system_convert(q: &Quantity, class: QuantityClass, dir: Direction) -> Result<Quantity> {
    beta_scale(q, &class.beta_exponent(), dir)
}

/// A m² + A′ m′² − C m m′; zero when the mutual rest densities balance.
pub fn mutual_density_check(
    m: &Quantity,
    m_prime: &Quantity,
    a: &PrecReal,
    a_prime: &PrecReal,
    c: &PrecReal,
) -> Result<Quantity> {
    m.require_same(m_prime)?;
    let r = a * &m.mag * &m.mag + a_prime * &m_prime.mag * &m_prime.mag - c * &m.mag * &m_prime.mag;
    Ok(Quantity::new(r, m.dims + m.dims))
}

/// (E_e, E_i) in system B: m₀c² + p′²/2m₀ and μc² + p²/2μ.
pub fn energies_b(
    m0: &Quantity,
    mu: &Quantity,
    p_ext: &Quantity,
    p_int: &Quantity,
    constants: &ConstantSet,
) -> Result<(Quantity, Quantity)> {
    let rest_e = rest_energy(m0, constants)?;
    let rest_i = rest_energy(mu, constants)?;
    Ok((
        rest_e.add(&kinetic(p_ext, m0)?)?.labeled("E_e"),
        rest_i.add(&kinetic(p_int, mu)?)?.labeled("E_i"),
    ))
}

/// System A drops the external kinetic term.
pub fn energies_a(
    m0: &Quantity,
    mu: &Quantity,
    p_int: &Quantity,
    constants: &ConstantSet,
) -> Result<(Quantity, Quantity)> {
    let rest_e = rest_energy(m0, constants)?;
    let rest_i = rest_energy(mu, constants)?;
    Ok((
        rest_e.labeled("E_e"),
        rest_i.add(&kinetic(p_int, mu)?)?.labeled("E_i"),
    ))
}

fn rest_energy(m: &Quantity, constants: &ConstantSet) -> Result<Quantity> {
    m.expect_dims(DimSig::mass())?;
    if !m.is_positive() {
        return Err(FtrError::NonPositiveInput("mass".into()));
    }
    Ok(m.mul(&constants.get("c")?.powi(2)))
}

fn kinetic(p: &Quantity, m: &Quantity) -> Result<Quantity> {
    p.expect_dims(DimSig::momentum())?;
    let two = PrecReal::from_i64(2, m.digits());
    Ok(p.powi(2).div(&m.scale(&two)))
}
