//! Weight function, exclusion top energy, the proper mass m₀ and its two
//! derivations, planoids, the non-Coulomb energy and the degeneracy-pressure
//! constant K.

use crate::error::{FtrError, Result};
use crate::geometry::CosmicFrame;
use crate::numeric::{beta, ConstantSet, DimSig, ExactRational, PrecReal, Quantity};

fn ratio(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

fn rpow(x: &ExactRational, e: &ExactRational, digits: u32) -> Result<PrecReal> {
    x.to_prec(digits).pow_ratio(e.as_big())
}

fn expect_positive(q: &Quantity, what: &str) -> Result<()> {
    if q.is_positive() {
        Ok(())
    } else {
        Err(FtrError::NonPositiveInput(what.into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UranoidTemperature {
    Zero,
    Infinite,
}

/// A uniform, featureless environment of N particles in a closed space.
#[derive(Clone, Debug, PartialEq)]
pub struct Uranoid {
    pub frame: CosmicFrame,
    pub temperature: UranoidTemperature,
}

impl Uranoid {
    /// Mean square of each momentum component: ϖ² when hot, zero at rest.
    pub fn mean_square_momentum(&self, constants: &ConstantSet) -> Result<Quantity> {
        match self.temperature {
            UranoidTemperature::Infinite => Ok(weight_constant(&self.frame.sigma(), constants)?
                .params
                .varpi
                .powi(2)),
            UranoidTemperature::Zero => Ok(Quantity::new(
                PrecReal::zero(self.frame.digits()),
                DimSig::momentum() + DimSig::momentum(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightParams {
    /// ϖ = ħ/2σ, a momentum
    pub varpi: Quantity,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightConstant {
    pub params: WeightParams,
    /// ϖc
    pub energy: Quantity,
    /// ϖc / m_e c²
    pub electron_units: PrecReal,
}

pub fn weight_constant(sigma: &Quantity, constants: &ConstantSet) -> Result<WeightConstant> {
    sigma.expect_dims(DimSig::length())?;
    expect_positive(sigma, "sigma")?;
    let hbar = constants.get("hbar")?;
    let c = constants.get("c")?;
    let varpi = hbar.div(&sigma.scale(&PrecReal::from_i64(2, sigma.digits())));
    varpi.expect_dims(DimSig::momentum())?;
    let energy = varpi.mul(&c);
    let electron_units = match constants.get("m_e") {
        Ok(me) => &energy.mag / me.mul(&c.powi(2)).mag,
        Err(_) => PrecReal::zero(constants.digits()),
    };
    Ok(WeightConstant {
        params: WeightParams {
            varpi: varpi.labeled("varpi"),
        },
        energy: energy.labeled("varpi c"),
        electron_units,
    })
}

/// w(p) = (2πϖ²)^{−1/2} e^{−p²/2ϖ²}, per unit momentum.
pub fn weight_apply(p: &Quantity, params: &WeightParams) -> Result<PrecReal> {
    p.expect_dims(DimSig::momentum())?;
    let v = &params.varpi.mag;
    let d = v.digits().max(p.digits());
    let two = PrecReal::from_i64(2, d);
    let peak = PrecReal::one(d) / (&two * PrecReal::pi(d) * v * v).sqrt();
    Ok(peak * (-(&p.mag * &p.mag) / (&two * v * v)).exp())
}

/// Ē = √3 ϖ c, from Ē² = 3ħ²/4σ².
pub fn infinite_t_energy(sigma: &Quantity, constants: &ConstantSet) -> Result<Quantity> {
    let w = weight_constant(sigma, constants)?;
    Ok(w.energy
        .scale(&PrecReal::from_i64(3, sigma.digits()).sqrt())
        .labeled("E_mean"))
}

/// E = (3n/8π)^{2/3} h²/2μ₀ for a filled momentum sphere with two particles
/// per cell h³.
pub fn exclusion_top_energy(
    n_density: &Quantity,
    mu0: &Quantity,
    constants: &ConstantSet,
) -> Result<Quantity> {
    n_density.expect_dims(DimSig::mlt(0, -3, 0))?;
    mu0.expect_dims(DimSig::mass())?;
    expect_positive(n_density, "number density")?;
    expect_positive(mu0, "mass")?;
    let h = constants.get("h")?;
    let d = n_density.digits();
    let base =
        n_density.scale(&(PrecReal::from_i64(3, d) / (PrecReal::from_i64(8, d) * PrecReal::pi(d))));
    let e = base
        .pow(&ratio(2, 3))?
        .mul(&h.powi(2))
        .div(&mu0.scale(&PrecReal::from_i64(2, d)));
    e.expect_dims(DimSig::energy())?;
    Ok(e.labeled("E_top"))
}

/// Ē/E for the filled momentum sphere.
pub fn mean_over_top() -> ExactRational {
    ratio(3, 5)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProperMass {
    pub m0: Quantity,
    /// (136/10) m₀
    pub big_m: Quantity,
}

/// m₀ = (3/4) ħ √(4N/5) / (c R₀), optionally with the observational β^{1/6}.
pub fn proper_mass(
    frame: &CosmicFrame,
    constants: &ConstantSet,
    observational: bool,
) -> Result<ProperMass> {
    let hbar = constants.get("hbar")?;
    let c = constants.get("c")?;
    let d = frame.digits().max(constants.digits());
    let root = (ratio(4, 5).to_prec(d) * frame.n()).sqrt();
    let mut m0 = hbar
        .scale(&(ratio(3, 4).to_prec(d) * root))
        .div(&c.mul(frame.r0()));
    if observational {
        m0 = m0.scale(&rpow(&beta(), &ratio(1, 6), d)?);
    }
    m0.expect_dims(DimSig::mass())?;
    let big_m = m0.scale_ratio(&ratio(136, 10));
    Ok(ProperMass {
        m0: m0.labeled("m0"),
        big_m: big_m.labeled("M"),
    })
}

/// σ = (136/10)(3/4) β^{1/6} ħ √(1/5) / (M c)
pub fn sigma_from_m(big_m: &Quantity, constants: &ConstantSet) -> Result<Quantity> {
    big_m.expect_dims(DimSig::mass())?;
    expect_positive(big_m, "M")?;
    let hbar = constants.get("hbar")?;
    let c = constants.get("c")?;
    let d = big_m.digits().max(constants.digits());
    let k = ratio(136, 10).to_prec(d)
        * ratio(3, 4).to_prec(d)
        * rpow(&beta(), &ratio(1, 6), d)?
        * ratio(1, 5).to_prec(d).sqrt();
    let s = hbar.scale(&k).div(&big_m.mul(&c));
    s.expect_dims(DimSig::length())?;
    Ok(s.labeled("sigma"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExclusionMass {
    pub m0: Quantity,
    /// ħ₁ = √(3/5) ħ
    pub hbar1: Quantity,
    /// G₁ = (5/3) G, when G is available
    pub g1: Option<Quantity>,
}

/// m₀² = (3/4)(3/5) ħ² N / (c R₀)², via the exclusion top energy and
/// ħ₁² = (3/5)ħ².
pub fn proper_mass_from_exclusion(
    frame: &CosmicFrame,
    constants: &ConstantSet,
) -> Result<ExclusionMass> {
    let hbar = constants.get("hbar")?;
    let c = constants.get("c")?;
    let d = frame.digits().max(constants.digits());
    let hbar1 = hbar.scale(&ratio(3, 5).to_prec(d).sqrt());
    // 𝔖³ = (3/4)N
    let top_cube = ratio(3, 4).to_prec(d) * frame.n();
    let m0_sq = hbar1
        .powi(2)
        .scale(&top_cube)
        .div(&c.mul(frame.r0()).powi(2));
    let m0 = m0_sq.sqrt();
    m0.expect_dims(DimSig::mass())?;
    let g1 = constants
        .get("G")
        .ok()
        .map(|g| g.scale_ratio(&ratio(5, 3)).labeled("G1"));
    Ok(ExclusionMass {
        m0: m0.labeled("m0"),
        hbar1: hbar1.labeled("hbar1"),
        g1,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Planoid {
    pub n1: PrecReal,
    pub r1: Quantity,
    pub special: bool,
}

impl Planoid {
    /// Ordinary planoid with R₁² / 5N₁ = σ².
    pub fn from_frame(frame: &CosmicFrame, n1: PrecReal) -> Result<Self> {
        if !n1.is_positive() {
            return Err(FtrError::NonPositiveInput("N1".into()));
        }
        let five = PrecReal::from_i64(5, n1.digits());
        let r1 = frame.sigma().scale(&(five * &n1).sqrt());
        Ok(Planoid {
            n1,
            r1,
            special: false,
        })
    }

    /// N₁ = N and R₁ = R₀.
    pub fn special(frame: &CosmicFrame) -> Self {
        Planoid {
            n1: frame.n().clone(),
            r1: frame.r0().clone(),
            special: true,
        }
    }
}

/// m₀ = (3/4) ħ √N₁ / (c R₁)
pub fn planoid_mass(p: &Planoid, constants: &ConstantSet) -> Result<Quantity> {
    p.r1.expect_dims(DimSig::length())?;
    expect_positive(&p.r1, "R1")?;
    let hbar = constants.get("hbar")?;
    let c = constants.get("c")?;
    let d = p.n1.digits().max(constants.digits());
    let m0 = hbar
        .scale(&(ratio(3, 4).to_prec(d) * p.n1.sqrt()))
        .div(&c.mul(&p.r1));
    m0.expect_dims(DimSig::mass())?;
    Ok(m0.labeled("m0"))
}

/// (σ₁, ϖ₁) with σ₁² = (4/5)σ² and ϖ₁ = ħ₁/2σ₁ = √(3/4) ϖ.
pub fn special_planoid(sigma: &Quantity, constants: &ConstantSet) -> Result<(Quantity, Quantity)> {
    sigma.expect_dims(DimSig::length())?;
    expect_positive(sigma, "sigma")?;
    let d = sigma.digits().max(constants.digits());
    let sigma1 = sigma.scale(&ratio(4, 5).to_prec(d).sqrt());
    let hbar1 = constants.get("hbar")?.scale(&ratio(3, 5).to_prec(d).sqrt());
    let varpi1 = hbar1.div(&sigma1.scale(&PrecReal::from_i64(2, d)));
    Ok((sigma1.labeled("sigma1"), varpi1.labeled("varpi1")))
}

/// B = −(4/3)^{1/2} 16π e² σ²
pub fn non_coulomb_b(sigma: &Quantity, constants: &ConstantSet) -> Result<Quantity> {
    sigma.expect_dims(DimSig::length())?;
    expect_positive(sigma, "sigma")?;
    let e = constants.get("e")?;
    let d = sigma.digits().max(constants.digits());
    let k = -(ratio(4, 3).to_prec(d).sqrt() * PrecReal::from_i64(16, d) * PrecReal::pi(d));
    let b = e.powi(2).mul(&sigma.powi(2)).scale(&k);
    b.expect_dims(DimSig::energy() + DimSig::mlt(0, 3, 0))?;
    Ok(b.labeled("B"))
}

/// Ratio m_p/m₀ used for the mass-corrected non-Coulomb term, M/m₀ = 136/10.
pub fn non_coulomb_mass_factor() -> ExactRational {
    ratio(136, 10)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NonCoulomb {
    /// E_nc at the requested r
    pub energy: Quantity,
    /// well depth A in E_nc = −A e^{−r²/k²}
    pub amplitude: Quantity,
    /// k = 2σ
    pub k: Quantity,
}

/// E_nc = −(16/3π)^{1/2} (e²/σ) e^{−r²/4σ²}, times m_p/m₀ when mass-corrected.
pub fn non_coulomb_energy(
    r: &Quantity,
    sigma: &Quantity,
    constants: &ConstantSet,
    mass_corrected: bool,
) -> Result<NonCoulomb> {
    r.expect_dims(DimSig::length())?;
    sigma.expect_dims(DimSig::length())?;
    expect_positive(sigma, "sigma")?;
    let e = constants.get("e")?;
    let d = sigma.digits().max(constants.digits());
    let pi = PrecReal::pi(d);
    let mut a = e
        .powi(2)
        .div(sigma)
        .scale(&(PrecReal::from_i64(16, d) / (PrecReal::from_i64(3, d) * pi)).sqrt());
    if mass_corrected {
        a = a.scale_ratio(&non_coulomb_mass_factor());
    }
    a.expect_dims(DimSig::energy())?;
    let k = sigma.scale(&PrecReal::from_i64(2, d));
    let x = &r.mag / &k.mag;
    let energy = a
        .scale(&(-(&x * &x)).exp())
        .scale(&PrecReal::from_i64(-1, d));
    Ok(NonCoulomb {
        energy: energy.labeled("E_nc"),
        amplitude: a.labeled("A"),
        k: k.labeled("k"),
    })
}

/// Like-charge energy e²/r + E_nc.
pub fn like_charge_energy(
    r: &Quantity,
    sigma: &Quantity,
    constants: &ConstantSet,
    mass_corrected: bool,
) -> Result<Quantity> {
    expect_positive(r, "r")?;
    let e = constants.get("e")?;
    let nc = non_coulomb_energy(r, sigma, constants, mass_corrected)?;
    e.powi(2).div(r).add(&nc.energy)
}

/// Radii where e²/r + E_nc changes sign, scanned over (0, 10σ] and refined
/// by bisection.
pub fn like_charge_sign_changes(
    sigma: &Quantity,
    constants: &ConstantSet,
    mass_corrected: bool,
) -> Result<Vec<Quantity>> {
    let d = sigma.digits().max(constants.digits());
    let at = |x: &PrecReal| -> Result<PrecReal> {
        let r = sigma.scale(x);
        Ok(like_charge_energy(&r, sigma, constants, mass_corrected)?.mag)
    };
    let steps = 2000;
    let step = PrecReal::from_i64(10, d) / PrecReal::from_i64(steps, d);
    let mut roots = Vec::new();
    let mut lo = step.clone();
    let mut f_lo = at(&lo)?;
    for i in 2..=steps {
        let hi = &step * PrecReal::from_i64(i, d);
        let f_hi = at(&hi)?;
        if f_lo.signum() * f_hi.signum() < 0 {
            let (mut a, mut b, mut fa) = (lo.clone(), hi.clone(), f_lo.clone());
            for _ in 0..80 {
                let mid = (&a + &b) / PrecReal::from_i64(2, d);
                let fm = at(&mid)?;
                if fa.signum() * fm.signum() <= 0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push(sigma.scale(&((a + b) / PrecReal::from_i64(2, d))));
        }
        lo = hi;
        f_lo = f_hi;
    }
    Ok(roots)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KForm {
    /// (1/5)(3/8π)^{2/3} h²/μ
    Paper,
    /// (3π²)^{2/3} ħ²/(5μ)
    Modern,
}

/// Degeneracy-pressure constant in P = K n^{5/3}, n a number density.
pub fn degeneracy_k(mu: &Quantity, constants: &ConstantSet, form: KForm) -> Result<Quantity> {
    mu.expect_dims(DimSig::mass())?;
    expect_positive(mu, "mu")?;
    let d = mu.digits().max(constants.digits());
    let pi = PrecReal::pi(d);
    let two_thirds = ratio(2, 3);
    let k = match form {
        KForm::Paper => {
            let h = constants.get("h")?;
            let f = (PrecReal::from_i64(3, d) / (PrecReal::from_i64(8, d) * pi))
                .pow_ratio(two_thirds.as_big())?
                / PrecReal::from_i64(5, d);
            h.powi(2).div(mu).scale(&f)
        }
        KForm::Modern => {
            let hbar = constants.get("hbar")?;
            let f = (PrecReal::from_i64(3, d) * &pi * &pi).pow_ratio(two_thirds.as_big())?
                / PrecReal::from_i64(5, d);
            hbar.powi(2).div(mu).scale(&f)
        }
    };
    k.expect_dims(DimSig::energy() + DimSig::mlt(0, 2, 0))?;
    Ok(k.labeled("K"))
}

/// K expressed per mass density, P = K′ ρ^{5/3} with ρ = n μ_e m_u.
pub fn degeneracy_k_per_mass_density(
    k: &Quantity,
    mu_e: &PrecReal,
    constants: &ConstantSet,
) -> Result<Quantity> {
    let mu = constants.get("m_u")?.scale(mu_e);
    Ok(k.div(&mu.pow(&ratio(5, 3))?).labeled("K_rho"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct InterchangeMass {
    /// m₃ = (136/3) m₀
    pub m3: Quantity,
    /// M = (136/10) m₀
    pub big_m: Quantity,
    /// (3/10)(136/3) = 136/10 holds exactly
    pub chain_consistent: bool,
}

pub fn interchange_mass(m0: &Quantity) -> Result<InterchangeMass> {
    m0.expect_dims(DimSig::mass())?;
    expect_positive(m0, "m0")?;
    let m3_factor = ratio(136, 3);
    let m_factor = ratio(136, 10);
    Ok(InterchangeMass {
        m3: m0.scale_ratio(&m3_factor).labeled("m3"),
        big_m: m0.scale_ratio(&m_factor).labeled("M"),
        chain_consistent: &ratio(3, 10) * &m3_factor == m_factor,
    })
}
