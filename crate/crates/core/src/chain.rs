//! End-to-end derivation of the constants from (N, R₀, β), each result set
//! beside the value Eddington printed and the modern measurement.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{FtrError, Result};
use crate::exclusion::{
    degeneracy_k, non_coulomb_energy, proper_mass, proper_mass_from_exclusion, sigma_from_m,
    weight_constant, KForm,
};
use crate::geometry::{carrier_range, einstein_ratio, solve_cosmic_pair, CosmicFrame};
use crate::numeric::{
    beta, natural_value, BigCount, ConstantSet, DimSig, ExactRational, PrecReal, Quantity,
};
use crate::particles::two_particle_roots;

/// Range constant used by the recession and proper-mass rows.
pub const RANGE_CONSTANT_CM: &str = "1.921e-13";
/// Rest energy of the charged pion.
pub const PION_MEV: &str = "139.57039";
/// Rest energy of the Z boson.
pub const Z_BOSON_GEV: &str = "91.1876";

fn ratio(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

fn beta_pow(n: i64, d: i64, digits: u32) -> Result<PrecReal> {
    beta().to_prec(digits).pow_ratio(ratio(n, d).as_big())
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoreticalN {
    pub exact: BigCount,
    pub decimal: PrecReal,
}

/// N = (3/2)·136·2²⁵⁶ = 204·2²⁵⁶
pub fn theoretical_n(digits: u32) -> TheoreticalN {
    let exact = BigCount(BigUint::from(204u32) << 256u32);
    let decimal = exact.to_prec(digits);
    TheoreticalN { exact, decimal }
}

/// G = 136 β^{1/6} h c (9/20)^{1/2} / (20 m_h² √N), from eliminating R₀
/// between R₀/N = G m_h/πc² and R₀/√N = (136/10)(9/20)^{1/2} β^{1/6} h/(2π c m_h).
pub fn g_from_n(n: &PrecReal, constants: &ConstantSet) -> Result<Quantity> {
    let h = constants.get("h")?;
    let c = constants.get("c")?;
    let mh = constants.get("m_h")?;
    let d = constants.digits().max(n.digits());
    let k = PrecReal::from_i64(136, d) * beta_pow(1, 6, d)? * ratio(9, 20).to_prec(d).sqrt()
        / (PrecReal::from_i64(20, d) * n.sqrt());
    let g = h.mul(&c).div(&mh.powi(2)).scale(&k);
    g.expect_dims(DimSig::mlt(-1, 3, -2))?;
    Ok(g.labeled("G"))
}

/// The N for which [`g_from_n`] returns `g`.
pub fn n_from_g(g: &Quantity, constants: &ConstantSet) -> Result<PrecReal> {
    let one = PrecReal::one(constants.digits());
    let at_one = g_from_n(&one, constants)?;
    let r = &at_one.mag / &g.mag;
    Ok(&r * &r)
}

pub fn derive_g(n: &BigCount, constants: &ConstantSet) -> Result<DerivationResult> {
    let g = g_from_n(&n.to_prec(constants.digits()), constants)?;
    let mut row = DerivationResult::new(
        "G",
        "G = 136 beta^(1/6) h c (9/20)^(1/2) / (20 m_h^2 sqrt(N))",
        g,
        "cm3.g-1.s-2",
        ToleranceClass::Exact,
    )
    .paper("6.6665e-8")?;
    if let Ok(modern) = ConstantSet::modern(constants.digits()).get("G") {
        row = row.modern_q(modern);
    }
    Ok(row)
}

/// η₁ = 136²/10 exactly, and η₂ the root ratio of 10m² − 136m m₀ + m₀² = 0.
pub fn mass_ratio_standard(digits: u32) -> Result<(ExactRational, PrecReal)> {
    let eta1 = ratio(136 * 136, 10);
    let eta2 = root_ratio(&PrecReal::one(digits), &PrecReal::one(digits))?;
    Ok((eta1, eta2))
}

/// η₁′ = (136²/10) β^{−5/6}, and η₂′ the root ratio of
/// 10m² − 136m m₀ + β^{5/6} m₀² = 0.
pub fn mass_ratio_current(digits: u32) -> Result<(PrecReal, PrecReal)> {
    let eta1 = ratio(136 * 136, 10).to_prec(digits) * beta_pow(-5, 6, digits)?;
    let eta2 = root_ratio(&PrecReal::one(digits), &beta_pow(5, 6, digits)?)?;
    Ok((eta1, eta2))
}

/// Heavy/light root ratio of 10m² − 136 m m₀ + c₀ m₀² = 0.
pub fn root_ratio(m0: &PrecReal, c0: &PrecReal) -> Result<PrecReal> {
    let m = |v: PrecReal| Quantity::new(v, DimSig::mass());
    let big = m(m0 * ratio(136, 10).to_prec(m0.digits()));
    let mu = m(c0 * m0 / PrecReal::from_i64(136, m0.digits()));
    let (heavy, light) = two_particle_roots(&big, &mu)?;
    Ok(heavy.mag / light.mag)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphaMode {
    /// exactly 1/137
    Paper,
    /// e²/ħc from the constant set
    Modern,
}

pub fn fine_structure(mode: AlphaMode, constants: &ConstantSet) -> Result<Quantity> {
    let d = constants.digits();
    let a = match mode {
        AlphaMode::Paper => Quantity::dimensionless(ratio(1, 137).to_prec(d)),
        AlphaMode::Modern => {
            let e = constants.get("e")?;
            let hbar = constants.get("hbar")?;
            let c = constants.get("c")?;
            e.powi(2).div(&hbar.mul(&c))
        }
    };
    a.expect_dims(DimSig::dimensionless())?;
    Ok(a.labeled("alpha"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rydberg {
    /// ½ α² μc/(2πħ) with α = 1/137, no e²
    pub paper: Quantity,
    /// the same with α = e²/ħc
    pub paper_modern_alpha: Quantity,
    /// 2π² μ e⁴ / (h³ c)
    pub textbook: Quantity,
    /// ½ α² μ c e²/(2πħ): the form with the extra e²
    pub with_e2: Quantity,
    /// μ is the observed (system A) intracule mass
    pub empirical: bool,
    pub paper_is_wavenumber: bool,
    pub with_e2_is_wavenumber: bool,
}

pub fn rydberg(mu: &Quantity, constants: &ConstantSet, empirical: bool) -> Result<Rydberg> {
    mu.expect_dims(DimSig::mass())?;
    if !mu.is_positive() {
        return Err(FtrError::NonPositiveInput("mu".into()));
    }
    let c = constants.get("c")?;
    let h = constants.get("h")?;
    let hbar = constants.get("hbar")?;
    let e = constants.get("e")?;
    let d = constants.digits();
    let pi = PrecReal::pi(d);
    let two_pi = Quantity::dimensionless(PrecReal::from_i64(2, d) * &pi);
    let core = mu.mul(&c).div(&two_pi.mul(&hbar));
    let form = |alpha: &Quantity| core.mul(&alpha.powi(2)).scale(&ratio(1, 2).to_prec(d));
    let paper = form(&fine_structure(AlphaMode::Paper, constants)?);
    let paper_modern_alpha = form(&fine_structure(AlphaMode::Modern, constants)?);
    let textbook = mu
        .mul(&e.powi(4))
        .div(&h.powi(3).mul(&c))
        .scale(&(PrecReal::from_i64(2, d) * &pi * &pi));
    textbook.expect_dims(DimSig::mlt(0, -1, 0))?;
    let with_e2 = paper.mul(&e.powi(2));
    let wavenumber = DimSig::mlt(0, -1, 0);
    Ok(Rydberg {
        paper_is_wavenumber: paper.dims.same_physical(&wavenumber),
        with_e2_is_wavenumber: with_e2.dims.same_physical(&wavenumber),
        paper: paper.labeled("R"),
        paper_modern_alpha: paper_modern_alpha.labeled("R"),
        textbook: textbook.labeled("R"),
        with_e2: with_e2.labeled("R"),
        empirical,
    })
}

/// (2/(3πβ²))√(5N) against e²/(G m_p m_e).
pub fn force_constant(n: &PrecReal, constants: &ConstantSet) -> Result<(PrecReal, PrecReal)> {
    let e = constants.get("e")?;
    let g = constants.get("G")?;
    let mp = constants.get("m_p")?;
    let me = constants.get("m_e")?;
    let d = constants.digits().max(n.digits());
    let b = beta().to_prec(d);
    let theory = PrecReal::from_i64(2, d) / (PrecReal::from_i64(3, d) * PrecReal::pi(d) * &b * &b)
        * (PrecReal::from_i64(5, d) * n).sqrt();
    let direct = e.powi(2).div(&g.mul(&mp).mul(&me));
    direct.expect_dims(DimSig::dimensionless())?;
    Ok((theory, direct.mag))
}

/// V₀ = c / (k √(3N)), an inverse time.
pub fn recession(k: &Quantity, n: &PrecReal, constants: &ConstantSet) -> Result<Quantity> {
    k.expect_dims(DimSig::length())?;
    if !k.is_positive() {
        return Err(FtrError::NonPositiveInput("k".into()));
    }
    let c = constants.get("c")?;
    let root = (PrecReal::from_i64(3, n.digits()) * n).sqrt();
    let v = c.div(&k.scale(&root));
    v.expect_dims(DimSig::mlt(0, 0, -1))?;
    Ok(v.labeled("V0"))
}

/// N implied by a recession constant V₀ and range constant k.
pub fn n_from_recession(v0: &Quantity, k: &Quantity, constants: &ConstantSet) -> Result<PrecReal> {
    let c = constants.get("c")?;
    let x = c.div(&k.mul(v0));
    x.expect_dims(DimSig::dimensionless())?;
    Ok(&x.mag * &x.mag / PrecReal::from_i64(3, x.mag.digits()))
}

/// h = H₀ / (100 km/s/Mpc)
pub fn hubble_dimensionless(h0: &Quantity) -> Result<PrecReal> {
    Ok(h0.in_unit("km.s-1.Mpc-1")? / PrecReal::from_i64(100, h0.digits()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct FaradayAudit {
    /// 𝔉 = e / (m_h c)
    pub faraday: Quantity,
    /// 4π·137³·𝔉²·m_h² as printed
    pub mu_a: Quantity,
    pub is_mass: bool,
}

pub fn mu_from_faraday(constants: &ConstantSet) -> Result<FaradayAudit> {
    let f = constants.get("F_h")?;
    let mh = constants.get("m_h")?;
    let d = constants.digits();
    let k = PrecReal::from_i64(4, d) * PrecReal::pi(d) * PrecReal::from_i64(137i64.pow(3), d);
    let mu_a = f.powi(2).mul(&mh.powi(2)).scale(&k);
    Ok(FaradayAudit {
        is_mass: mu_a.dims.same_physical(&DimSig::mass()),
        faraday: f.labeled("F_h"),
        mu_a: mu_a.labeled("mu_A"),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhotonIdentity {
    /// 1 kg in natural units: (magnitude, power of s)
    pub kg: (PrecReal, i64),
    /// ħ/c in kg·m, the factor in "1 = x kg·m"
    pub unity_kg_m: PrecReal,
    /// C = p/n for one photon of unit frequency per unit natural volume
    pub c_value: PrecReal,
    /// power of s carried by C
    pub c_power: i64,
}

pub fn photon_momentum_identity(constants: &ConstantSet) -> Result<PhotonIdentity> {
    let c = constants.get("c")?;
    let hbar = constants.get("hbar")?;
    let d = constants.digits();
    let one = |unit: &str| Quantity::parse(&format!("1 {unit}"), d);
    let kg = natural_value(&one("kg")?, constants)?;
    let unity_kg_m = hbar.div(&c).in_unit("kg.m")?;
    // p = ħω/c with ω = 1 s⁻¹, n = 1/V with V = (c · 1 s)³
    let omega = one("s-1")?;
    let p = hbar.mul(&omega).div(&c);
    let volume = c.mul(&one("s")?).powi(3);
    let big_c = p.mul(&volume);
    let (c_value, c_power) = natural_value(&big_c, constants)?;
    Ok(PhotonIdentity {
        kg,
        unity_kg_m,
        c_value,
        c_power,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ToleranceClass {
    /// results of exact rational chains
    Exact,
    /// results that move with the constant vintage
    Vintage,
    /// order-of-magnitude agreement
    Magnitude,
}

impl ToleranceClass {
    pub fn default_tolerance(self) -> f64 {
        match self {
            ToleranceClass::Exact => 1e-3,
            ToleranceClass::Vintage => 1e-2,
            ToleranceClass::Magnitude => 5e-2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ToleranceClass::Exact => "exact",
            ToleranceClass::Vintage => "vintage",
            ToleranceClass::Magnitude => "magnitude",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// nothing to compare against
    Info,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Info => "info",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Auto,
    None,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DerivationResult {
    pub name: String,
    pub formula: String,
    pub computed: Quantity,
    /// unit expression the values are displayed in
    pub unit: String,
    pub paper_value: Option<Quantity>,
    pub modern_value: Option<Quantity>,
    pub rel_err_paper: Option<f64>,
    pub rel_err_modern: Option<f64>,
    pub class: ToleranceClass,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub note: String,
    target: Target,
}

fn rel_err(a: &Quantity, b: &Quantity) -> Option<f64> {
    if b.mag.is_zero() || !a.dims.same_physical(&b.dims) {
        return None;
    }
    Some(a.mag.rel_diff(&b.mag).to_f64())
}

impl DerivationResult {
    pub fn new(
        name: &str,
        formula: &str,
        computed: Quantity,
        unit: &str,
        class: ToleranceClass,
    ) -> Self {
        let mut r = DerivationResult {
            name: name.to_string(),
            formula: formula.to_string(),
            computed,
            unit: unit.to_string(),
            paper_value: None,
            modern_value: None,
            rel_err_paper: None,
            rel_err_modern: None,
            class,
            tolerance: class.default_tolerance(),
            verdict: Verdict::Info,
            note: String::new(),
            target: Target::Auto,
        };
        r.evaluate();
        r
    }

    fn parse_in_unit(&self, decimal: &str) -> Result<Quantity> {
        let q = Quantity::parse(&format!("{decimal} {}", self.unit), self.computed.digits())?;
        self.computed.require_same(&q)?;
        Ok(q)
    }

    /// Paper value given in the row's display unit.
    pub fn paper(mut self, decimal: &str) -> Result<Self> {
        self.paper_value = Some(self.parse_in_unit(decimal)?);
        self.evaluate();
        Ok(self)
    }

    pub fn modern(self, decimal: &str) -> Result<Self> {
        let q = self.parse_in_unit(decimal)?;
        Ok(self.modern_q(q))
    }

    pub fn modern_q(mut self, q: Quantity) -> Self {
        self.modern_value = Some(q);
        self.evaluate();
        self
    }

    pub fn note(mut self, note: &str) -> Self {
        self.note = note.to_string();
        self
    }

    /// Comparands are shown but no verdict is drawn.
    pub fn info_only(mut self) -> Self {
        self.target = Target::None;
        self.evaluate();
        self
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self.evaluate();
        self
    }

    fn evaluate(&mut self) {
        self.rel_err_paper = self
            .paper_value
            .as_ref()
            .and_then(|p| rel_err(&self.computed, p));
        self.rel_err_modern = self
            .modern_value
            .as_ref()
            .and_then(|m| rel_err(&self.computed, m));
        let err = match self.target {
            Target::None => None,
            Target::Auto => self.rel_err_paper.or(self.rel_err_modern),
        };
        self.verdict = match err {
            None => Verdict::Info,
            Some(e) if e <= self.tolerance => Verdict::Pass,
            Some(_) => Verdict::Fail,
        };
    }

    /// Value of `q` in the row's display unit.
    pub fn display(&self, q: &Quantity) -> Result<PrecReal> {
        if self.unit == "1" || self.unit.is_empty() {
            return Ok(q.mag.clone());
        }
        q.in_unit(&self.unit)
    }
}

/// Per-row or per-class tolerance overrides, keyed by row name or by
/// `exact` / `vintage` / `magnitude`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ChainOptions {
    pub tolerances: BTreeMap<String, f64>,
}

impl ChainOptions {
    fn tolerance_for(&self, row: &DerivationResult) -> f64 {
        self.tolerances
            .get(&row.name)
            .or_else(|| self.tolerances.get(row.class.name()))
            .copied()
            .unwrap_or(row.tolerance)
    }
}

/// Constants the chain reads, in the order they are first needed.
pub const CHAIN_INPUTS: [&str; 8] = ["c", "h", "m_h", "G", "e", "m_e", "m_p", "hbar"];

pub fn run_chain(constants: &ConstantSet, options: &ChainOptions) -> Result<Vec<DerivationResult>> {
    constants.require(&CHAIN_INPUTS)?;
    let d = constants.digits();
    let modern = ConstantSet::modern(d);
    let q = |s: &str| Quantity::parse(s, d);
    let mut rows = Vec::new();

    let n = theoretical_n(d);
    rows.push(
        DerivationResult::new(
            "theoretical_N",
            "N = (3/2) 136 2^256",
            Quantity::dimensionless(n.decimal.clone()),
            "1",
            ToleranceClass::Magnitude,
        )
        .paper("2.31e79")?
        .note("paper value is the N solved from the cosmic pair"),
    );

    let ratio_r0n = einstein_ratio(constants)?;
    rows.push(
        DerivationResult::new(
            "einstein_ratio",
            "R0/N = G m_h / (pi c^2)",
            ratio_r0n.clone(),
            "cm",
            ToleranceClass::Vintage,
        )
        .paper("3.95e-53")?
        .modern_q(einstein_ratio(&modern)?),
    );

    let pair = solve_cosmic_pair(&ratio_r0n, &q("1.9e-13 cm")?)?;
    rows.push(
        DerivationResult::new(
            "cosmic_N",
            "N = (k / (R0/N))^2",
            Quantity::dimensionless(pair.n().clone()),
            "1",
            ToleranceClass::Vintage,
        )
        .paper("2.31e79")?,
    );
    rows.push(
        DerivationResult::new(
            "cosmic_R0",
            "R0 = k sqrt(N)",
            pair.r0().clone(),
            "cm",
            ToleranceClass::Vintage,
        )
        .paper("9.14e26")?,
    );

    let mut g = derive_g(&n.exact, constants)?;
    g.modern_value = Some(modern.get("G")?);
    g.evaluate();
    rows.push(g);

    let mh = constants.get("m_h")?;
    let sigma = sigma_from_m(&mh, constants)?;
    rows.push(
        DerivationResult::new(
            "sigma",
            "sigma = (136/10)(3/4) beta^(1/6) hbar sqrt(1/5) / (M c)",
            sigma.clone(),
            "cm",
            ToleranceClass::Vintage,
        )
        .paper("9.53657e-14")?
        .modern_q(sigma_from_m(&modern.get("m_h")?, &modern)?),
    );
    let k_sigma = sigma.scale(&PrecReal::from_i64(2, d));
    rows.push(
        DerivationResult::new(
            "range_k",
            "k = 2 sigma",
            k_sigma,
            "cm",
            ToleranceClass::Magnitude,
        )
        .paper("1.9e-13")?,
    );

    let k = q(&format!("{RANGE_CONSTANT_CM} cm"))?;
    let v0 = recession(&k, &n.decimal, constants)?;
    rows.push(
        DerivationResult::new(
            "recession_V0",
            "V0 = c / (k sqrt(3N))",
            v0.clone(),
            "km.s-1.Mpc-1",
            ToleranceClass::Vintage,
        )
        .paper("572.4")?
        .modern_q(modern.get("H_0")?)
        .note("contemporary observation 560 km/s/Mpc"),
    );
    rows.push(
        DerivationResult::new(
            "hubble_h",
            "h = V0 / (100 km/s/Mpc)",
            Quantity::dimensionless(hubble_dimensionless(&v0)?),
            "1",
            ToleranceClass::Vintage,
        )
        .paper("5.724")?
        .modern_q(Quantity::dimensionless(hubble_dimensionless(
            &modern.get("H_0")?,
        )?))
        .note("outside the modern range 0.5 to 1"),
    );

    let (eta1, eta2) = mass_ratio_standard(d)?;
    let (eta1c, eta2c) = mass_ratio_current(d)?;
    let dl = Quantity::dimensionless;
    let mp_me = modern.get("m_p")?.div(&modern.get("m_e")?);
    rows.push(
        DerivationResult::new(
            "eta1",
            "M/mu = 136^2/10",
            dl(eta1.to_prec(d)),
            "1",
            ToleranceClass::Exact,
        )
        .paper("1849.6")?
        .note(&format!("exact {eta1}")),
    );
    rows.push(
        DerivationResult::new(
            "eta2",
            "root ratio of 10 m^2 - 136 m m0 + m0^2 = 0",
            dl(eta2),
            "1",
            ToleranceClass::Exact,
        )
        .paper("1847.6")?,
    );
    rows.push(
        DerivationResult::new(
            "eta1_current",
            "(M/mu)_A = (136^2/10) beta^(-5/6)",
            dl(eta1c),
            "1",
            ToleranceClass::Exact,
        )
        .paper("1838.34")?,
    );
    rows.push(
        DerivationResult::new(
            "eta2_current",
            "root ratio of 10 m^2 - 136 m m0 + beta^(5/6) m0^2 = 0",
            dl(eta2c),
            "1",
            ToleranceClass::Exact,
        )
        .paper("1836.34")?
        .modern_q(mp_me),
    );

    let (theory, direct) = force_constant(&n.decimal, constants)?;
    rows.push(
        DerivationResult::new(
            "force_constant",
            "F = (2/(3 pi beta^2)) sqrt(5N) against e^2/(G m_p m_e)",
            dl(theory),
            "1",
            ToleranceClass::Vintage,
        )
        .modern_q(dl(direct)),
    );

    let alpha = fine_structure(AlphaMode::Modern, constants)?;
    rows.push(
        DerivationResult::new(
            "alpha_inverse",
            "1/alpha = hbar c / e^2",
            alpha.recip(),
            "1",
            ToleranceClass::Exact,
        )
        .paper("137")?,
    );

    let mu = constants
        .get("m_p")?
        .mul(&constants.get("m_e")?)
        .div(&constants.get("m_p")?.add(&constants.get("m_e")?)?);
    let ryd = rydberg(&mu, constants, true)?;
    rows.push(
        DerivationResult::new(
            "rydberg",
            "R = (1/2)(1/137)^2 mu c / (2 pi hbar)",
            ryd.paper.clone(),
            "cm-1",
            ToleranceClass::Vintage,
        )
        .modern_q(ryd.textbook.clone())
        .note("modern column is 2 pi^2 mu e^4 / (h^3 c)"),
    );
    rows.push(
        DerivationResult::new(
            "rydberg_with_e2",
            "R = (1/2)(1/137)^2 mu c e^2 / (2 pi hbar)",
            ryd.with_e2.clone(),
            &ryd.with_e2.dims.to_string(),
            ToleranceClass::Exact,
        )
        .info_only()
        .note(if ryd.with_e2_is_wavenumber {
            "dimensions: wavenumber"
        } else {
            "dimension audit: not a wavenumber"
        }),
    );

    let audit = mu_from_faraday(constants)?;
    rows.push(
        DerivationResult::new(
            "mu_faraday",
            "mu_A = 4 pi 137^3 F^2 m_h^2, F = e/(m_h c)",
            audit.mu_a.clone(),
            &audit.mu_a.dims.to_string(),
            ToleranceClass::Magnitude,
        )
        .info_only()
        .note(if audit.is_mass {
            "dimension audit: mass"
        } else {
            "dimension audit: not a mass"
        }),
    );

    let w = weight_constant(&sigma, constants)?;
    rows.push(
        DerivationResult::new(
            "weight_constant",
            "varpi c / (m_e c^2), varpi = hbar/(2 sigma)",
            dl(w.electron_units),
            "1",
            ToleranceClass::Magnitude,
        )
        .paper("200")?,
    );

    let nc = non_coulomb_energy(&q("0 cm")?, &sigma, constants, true)?;
    let mec2 = constants.get("m_e")?.mul(&constants.get("c")?.powi(2));
    rows.push(
        DerivationResult::new(
            "nuclear_A",
            "A = (16/(3 pi))^(1/2) (136/10) e^2/sigma, in m_e c^2",
            dl(&nc.amplitude.mag / &mec2.mag),
            "1",
            ToleranceClass::Vintage,
        )
        .paper("52.01")?
        .modern("52.26")?
        .note("modern column is the observed well depth"),
    );

    let me = constants.get("m_e")?;
    rows.push(
        DerivationResult::new(
            "degeneracy_K",
            "K = (1/5)(3/(8 pi))^(2/3) h^2/mu at mu = m_e",
            degeneracy_k(&me, constants, KForm::Paper)?,
            "erg.cm2",
            ToleranceClass::Exact,
        )
        .modern_q(degeneracy_k(&me, constants, KForm::Modern)?)
        .note("modern column is (3 pi^2)^(2/3) hbar^2/(5 m_e)"),
    );

    let frame = CosmicFrame::new(n.decimal.clone(), k.scale(&n.decimal.sqrt()))?;
    let pm = proper_mass(&frame, constants, true)?;
    rows.push(
        DerivationResult::new(
            "proper_mass_M",
            "M = (136/10)(3/4) beta^(1/6) hbar sqrt(4N/5) / (c R0)",
            pm.big_m.clone(),
            "g",
            ToleranceClass::Magnitude,
        )
        .modern_q(modern.get("m_h")?),
    );
    let two_path = proper_mass_from_exclusion(&frame, constants)?;
    let plain = proper_mass(&frame, constants, false)?;
    rows.push(
        DerivationResult::new(
            "proper_mass_two_path",
            "m0^2 = (3/4)(3/5) hbar^2 N / (c R0)^2",
            two_path.m0.clone(),
            "g",
            ToleranceClass::Exact,
        )
        .modern_q(plain.m0.clone())
        .with_tolerance(1e-40)
        .note("modern column is (3/4) hbar sqrt(4N/5) / (c R0)"),
    );

    rows.push(
        DerivationResult::new(
            "pion_range",
            "k = hbar / (2 m c)",
            carrier_range(&q(&format!("{PION_MEV} MeV"))?, constants)?,
            "cm",
            ToleranceClass::Magnitude,
        )
        .paper("0.73e-13")?,
    );
    rows.push(
        DerivationResult::new(
            "z_range",
            "k = hbar / (2 m c)",
            carrier_range(&q(&format!("{Z_BOSON_GEV} GeV"))?, constants)?,
            "cm",
            ToleranceClass::Magnitude,
        )
        .note("weak range of order 1e-15 cm or below"),
    );

    let photon = photon_momentum_identity(constants)?;
    rows.push(
        DerivationResult::new(
            "kg_in_natural_units",
            "1 kg = c^2/hbar s^-1",
            dl(photon.kg.0.clone()),
            "1",
            ToleranceClass::Vintage,
        )
        .paper("8.540e50")?
        .note(&format!("power of s: {}", photon.kg.1)),
    );
    rows.push(
        DerivationResult::new(
            "photon_C",
            "C = p/n in natural units",
            dl(photon.c_value.clone()),
            "1",
            ToleranceClass::Magnitude,
        )
        .paper("1")?
        .note(&format!("power of s: {}", photon.c_power)),
    );

    let n_h0 = n_from_recession(&modern.get("H_0")?, &k, constants)?;
    rows.push(
        DerivationResult::new(
            "N_from_H0",
            "N = (c / (k V0))^2 / 3",
            dl(n_h0),
            "1",
            ToleranceClass::Magnitude,
        )
        .info_only()
        .note("what-if: N implied by the modern Hubble constant"),
    );

    for r in &mut rows {
        r.tolerance = options.tolerance_for(r);
        r.evaluate();
    }
    Ok(rows)
}
