//! Statistical foundation of the uncertainty constant: the cosmic frame
//! (N, R₀), fluctuation decomposition, the σ-metric, the range constant and
//! the Einstein-universe relation.

use crate::error::{FtrError, Result};
use crate::numeric::{ConstantSet, DimSig, PrecReal, Quantity};

/// The two cosmological numbers and everything derived from them.
#[derive(Clone, Debug, PartialEq)]
pub struct CosmicFrame {
    n: PrecReal,
    r0: Quantity,
}

impl CosmicFrame {
    pub fn new(n: PrecReal, r0: Quantity) -> Result<Self> {
        r0.expect_dims(DimSig::length())?;
        if !n.is_positive() {
            return Err(FtrError::NonPositiveInput("N".into()));
        }
        if !r0.is_positive() {
            return Err(FtrError::NonPositiveInput("R0".into()));
        }
        Ok(CosmicFrame { n, r0 })
    }

    pub fn n(&self) -> &PrecReal {
        &self.n
    }

    pub fn r0(&self) -> &Quantity {
        &self.r0
    }

    pub fn digits(&self) -> u32 {
        self.n.digits().max(self.r0.digits())
    }

    fn two_sqrt_n(&self) -> PrecReal {
        PrecReal::from_i64(2, self.digits()) * self.n.sqrt()
    }

    /// σ = R₀ / 2√N
    pub fn sigma(&self) -> Quantity {
        Quantity::new(&self.r0.mag / self.two_sqrt_n(), DimSig::length()).labeled("sigma")
    }

    /// σ_ε = 1 / 2√N
    pub fn sigma_eps(&self) -> PrecReal {
        PrecReal::one(self.digits()) / self.two_sqrt_n()
    }

    /// k = 2σ = R₀ / √N
    pub fn k(&self) -> Quantity {
        Quantity::new(&self.r0.mag / self.n.sqrt(), DimSig::length()).labeled("k")
    }
}

pub fn sigma_from_cosmic(n: &PrecReal, r0: &Quantity) -> Result<Quantity> {
    Ok(CosmicFrame::new(n.clone(), r0.clone())?.sigma())
}

/// Zero-mean Gaussian over a count deviation.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussianPdf {
    pub mean: PrecReal,
    pub std: PrecReal,
}

impl GaussianPdf {
    pub fn centered(std: PrecReal) -> Result<Self> {
        if !std.is_positive() {
            return Err(FtrError::Domain(
                "standard deviation must be positive".into(),
            ));
        }
        Ok(GaussianPdf {
            mean: PrecReal::zero(std.digits()),
            std,
        })
    }

    pub fn variance(&self) -> PrecReal {
        &self.std * &self.std
    }

    pub fn density(&self, y: f64) -> f64 {
        let s = self.std.to_f64();
        let m = self.mean.to_f64();
        let z = (y - m) / s;
        (-0.5 * z * z).exp() / (s * (2.0 * std::f64::consts::PI).sqrt())
    }
}

/// Ordinary (finite n₀), extraordinary (finite N) and compound
/// fluctuations of a count n₀ drawn from N.
#[derive(Clone, Debug, PartialEq)]
pub struct FluctuationSplit {
    /// std √n₀
    pub ordinary: GaussianPdf,
    /// std n₀/√N
    pub extraordinary: GaussianPdf,
    /// std √(n₀(1 − n₀/N))
    pub compound: GaussianPdf,
    /// std of the fractional scale fluctuation ζ, 1/√N
    pub zeta: GaussianPdf,
}

pub fn fluctuation_split(n0: &PrecReal, n: &PrecReal) -> Result<FluctuationSplit> {
    if !n0.is_positive() || !n.is_positive() {
        return Err(FtrError::Domain("counts must be positive".into()));
    }
    if n0 >= n {
        return Err(FtrError::Domain("n0 must be smaller than N".into()));
    }
    let one = PrecReal::one(n0.digits().max(n.digits()));
    let sqrt_n = n.sqrt();
    Ok(FluctuationSplit {
        ordinary: GaussianPdf::centered(n0.sqrt())?,
        extraordinary: GaussianPdf::centered(n0 / &sqrt_n)?,
        compound: GaussianPdf::centered((n0 * (&one - n0 / n)).sqrt())?,
        zeta: GaussianPdf::centered(&one / &sqrt_n)?,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaEpsilon {
    /// (1+ζ)^½ − 1
    pub exact: PrecReal,
    /// ζ/2
    pub approx: PrecReal,
    /// |exact − approx|
    pub error: PrecReal,
}

pub fn zeta_epsilon(zeta: &PrecReal) -> Result<ZetaEpsilon> {
    let one = PrecReal::one(zeta.digits());
    let base = &one + zeta;
    if !base.is_positive() {
        return Err(FtrError::Domain("1 + zeta must be positive".into()));
    }
    let exact = base.sqrt() - &one;
    let approx = zeta / PrecReal::from_i64(2, zeta.digits());
    let error = (&exact - &approx).abs();
    Ok(ZetaEpsilon {
        exact,
        approx,
        error,
    })
}

/// Radial and transverse local uncertainty at distance r.
pub fn local_uncertainty(r: &Quantity, frame: &CosmicFrame) -> Result<(Quantity, Quantity)> {
    r.expect_dims(DimSig::length())?;
    let sigma = frame.sigma();
    let s2 = &sigma.mag * &sigma.mag;
    let er = frame.sigma_eps() * &r.mag;
    let e2 = &er * &er;
    let mut radial2 = &s2 - &e2;
    if radial2.is_negative() {
        let tol = PrecReal::tolerance(frame.digits(), frame.digits() as i64 - 5);
        if (&e2 - &s2) / &s2 > tol {
            return Err(FtrError::OutOfRange(format!(
                "r = {} lies beyond the spherical frame",
                r.mag.to_sci(6)
            )));
        }
        radial2 = PrecReal::zero(frame.digits());
    }
    Ok((Quantity::new(radial2.sqrt(), DimSig::length()), sigma))
}

/// ds² = dr²/(1 − (σ_ε/σ)² r²) + r² dθ² + r² sin²θ dφ²
pub fn line_element(
    r: &Quantity,
    dr: &Quantity,
    theta: &PrecReal,
    dtheta: &PrecReal,
    dphi: &PrecReal,
    frame: &CosmicFrame,
) -> Result<Quantity> {
    r.expect_dims(DimSig::length())?;
    dr.expect_dims(DimSig::length())?;
    let digits = frame.digits().max(r.digits());
    let one = PrecReal::one(digits);
    let curv = frame.sigma_eps() / frame.sigma().mag;
    let denom = &one - &curv * &curv * &r.mag * &r.mag;
    if !denom.is_positive() {
        return Err(FtrError::Singular("r must be inside R0".into()));
    }
    let r2 = &r.mag * &r.mag;
    let s = theta.sin();
    let ds2 = &dr.mag * &dr.mag / denom + &r2 * dtheta * dtheta + &r2 * &s * &s * dphi * dphi;
    Ok(Quantity::new(ds2, DimSig::mlt(0, 2, 0)))
}

/// Standard deviation σ√2 of the geometric-origin scatter that a direct
/// measurement removes.
pub fn direct_measure_correction(sigma: &Quantity) -> Quantity {
    sigma.scale(&PrecReal::from_i64(2, sigma.digits()).sqrt())
}

pub fn range_constant(frame: &CosmicFrame) -> Quantity {
    frame.k()
}

/// R₀/N = G m_h / (π c²)
pub fn einstein_ratio(constants: &ConstantSet) -> Result<Quantity> {
    let g = constants.get("G")?;
    let mh = constants.get("m_h")?;
    let c = constants.get("c")?;
    let pi = Quantity::dimensionless(PrecReal::pi(constants.digits()));
    let q = g.mul(&mh).div(&pi.mul(&c.powi(2)));
    q.expect_dims(DimSig::length())?;
    Ok(q.labeled("R0/N"))
}

/// Solves R₀/N = ratio and R₀/√N = k for (N, R₀).
pub fn solve_cosmic_pair(ratio: &Quantity, k: &Quantity) -> Result<CosmicFrame> {
    ratio.expect_dims(DimSig::length())?;
    k.expect_dims(DimSig::length())?;
    if !ratio.is_positive() || !k.is_positive() {
        return Err(FtrError::NonPositiveInput(
            "ratio and k must be positive".into(),
        ));
    }
    let sqrt_n = &k.mag / &ratio.mag;
    let n = &sqrt_n * &sqrt_n;
    let r0 = Quantity::new(&k.mag * &sqrt_n, DimSig::length());
    CosmicFrame::new(n, r0)
}

/// k ≈ ħ/(2mc). Accepts a mass or a rest energy.
pub fn carrier_range(m: &Quantity, constants: &ConstantSet) -> Result<Quantity> {
    let hbar = constants.get("hbar")?;
    let c = constants.get("c")?;
    let mass = if m.dims.same_physical(&DimSig::energy()) {
        m.div(&c.powi(2))
    } else {
        m.expect_dims(DimSig::mass())?.clone()
    };
    if !mass.is_positive() {
        return Err(FtrError::NonPositiveInput("carrier mass".into()));
    }
    let two = Quantity::dimensionless(PrecReal::from_i64(2, mass.digits()));
    let k = hbar.div(&two.mul(&mass).mul(&c));
    k.expect_dims(DimSig::length())?;
    Ok(k.labeled("range"))
}

/// O′P′/OP = 1 − σ_ε
pub fn projection_ratio(frame: &CosmicFrame) -> PrecReal {
    PrecReal::one(frame.digits()) - frame.sigma_eps()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::DEFAULT_DIGITS;

    fn q(s: &str) -> Quantity {
        Quantity::parse(s, DEFAULT_DIGITS).unwrap()
    }

    fn p(s: &str) -> PrecReal {
        PrecReal::parse_decimal(s, DEFAULT_DIGITS).unwrap()
    }

    fn close(a: &PrecReal, b: f64, rel: f64) -> bool {
        (a.to_f64() - b).abs() <= rel * b.abs()
    }

    #[test]
    fn sigma_examples() {
        let s = sigma_from_cosmic(&p("2.31e79"), &q("9.14e26 cm")).unwrap();
        assert!(close(&s.mag, 9.5e-14, 0.01));
        assert_eq!(sigma_from_cosmic(&p("1"), &q("2 cm")).unwrap().mag, p("1"));
        assert_eq!(sigma_from_cosmic(&p("4"), &q("8 cm")).unwrap().mag, p("2"));
        assert!(matches!(
            sigma_from_cosmic(&p("0"), &q("1 cm")),
            Err(FtrError::NonPositiveInput(_))
        ));
        assert!(sigma_from_cosmic(&p("1"), &q("1 g")).is_err());
    }

    #[test]
    fn fluctuation_examples() {
        let f = fluctuation_split(&p("1e4"), &p("1e8")).unwrap();
        assert!(f.compound.std.rel_diff(&p("99.99499987499375")) < p("1e-15"));
        assert_eq!(f.ordinary.std, p("100"));
        assert!(f.extraordinary.std.rel_diff(&p("1")) < p("1e-45"));
        let f = fluctuation_split(&p("1e4"), &p("1e60")).unwrap();
        assert!(f.compound.std.rel_diff(&f.ordinary.std) < p("1e-50"));
        let f = fluctuation_split(&p("1"), &p("1e39")).unwrap();
        assert!(close(&f.zeta.std, 3.162277660168379e-20, 1e-12));
        assert!(matches!(
            fluctuation_split(&p("5"), &p("5")),
            Err(FtrError::Domain(_))
        ));
    }

    #[test]
    fn compound_variance_is_ordinary_minus_extraordinary() {
        let f = fluctuation_split(&p("37"), &p("1000")).unwrap();
        let lhs = f.compound.variance();
        let rhs = f.ordinary.variance() - f.extraordinary.variance();
        assert!(lhs.rel_diff(&rhs) < PrecReal::tolerance(50, 45));
    }

    #[test]
    fn zeta_examples() {
        let z = zeta_epsilon(&p("0")).unwrap();
        assert!(z.exact.is_zero());
        let z = zeta_epsilon(&p("1e-20")).unwrap();
        assert!(close(&z.exact, 5e-21, 1e-15));
        // next series term is ζ²/8 = 1.25e-41
        assert!(z.error < p("1e-40"));
        let z = zeta_epsilon(&p("3")).unwrap();
        assert_eq!(z.exact, p("1"));
        assert_eq!(z.approx, p("1.5"));
        assert!(zeta_epsilon(&p("-1")).is_err());
    }

    fn unit_frame() -> CosmicFrame {
        // σ = 1 cm, R0 = 10 cm, N = 25
        CosmicFrame::new(p("25"), q("10 cm")).unwrap()
    }

    #[test]
    fn local_uncertainty_examples() {
        let f = unit_frame();
        let (rad, tr) = local_uncertainty(&q("0 cm"), &f).unwrap();
        assert_eq!(rad.mag, f.sigma().mag);
        assert_eq!(tr.mag, f.sigma().mag);
        let (rad, _) = local_uncertainty(&q("10 cm"), &f).unwrap();
        assert!(rad.mag < p("1e-20"));
        let (rad, _) = local_uncertainty(&q("5 cm"), &f).unwrap();
        let expect = p("3").sqrt() / p("2");
        assert!(rad.mag.rel_diff(&expect) < PrecReal::tolerance(50, 45));
        assert!(matches!(
            local_uncertainty(&q("10.001 cm"), &f),
            Err(FtrError::OutOfRange(_))
        ));
    }

    #[test]
    fn line_element_examples() {
        let f = unit_frame();
        let z = p("0");
        let ds = line_element(&q("0 cm"), &q("1 cm"), &z, &z, &z, &f).unwrap();
        assert_eq!(ds.mag, p("1"));
        let r = Quantity::new(p("10") / p("2").sqrt(), DimSig::length());
        let ds = line_element(&r, &q("1 cm"), &z, &z, &z, &f).unwrap();
        assert!(ds.mag.rel_diff(&p("2")) < PrecReal::tolerance(50, 45));
        let half_pi = PrecReal::pi(50) / p("2");
        let ds = line_element(&q("1 cm"), &q("0 cm"), &half_pi, &p("1"), &z, &f).unwrap();
        assert!(ds.mag.rel_diff(&p("1")) < PrecReal::tolerance(50, 45));
        assert!(matches!(
            line_element(&q("10 cm"), &q("1 cm"), &z, &z, &z, &f),
            Err(FtrError::Singular(_))
        ));
    }

    #[test]
    fn direct_measure_examples() {
        let c = direct_measure_correction(&q("1 cm"));
        assert_eq!(c.mag, p("2").sqrt());
        let c = direct_measure_correction(&q("9.537e-14 cm"));
        assert_eq!(c.mag.to_sci(5), "1.3487e-13");
        assert!(direct_measure_correction(&q("0 cm")).mag.is_zero());
    }

    #[test]
    fn range_constant_examples() {
        let f = CosmicFrame::new(p("2.31e79"), q("9.14e26 cm")).unwrap();
        assert!(close(&range_constant(&f).mag, 1.90e-13, 0.005));
        let f = CosmicFrame::new(p("1"), q("1 cm")).unwrap();
        assert_eq!(range_constant(&f).mag, p("1"));
    }

    #[test]
    fn einstein_ratio_examples() {
        let paper = ConstantSet::paper_era(50);
        assert!(close(&einstein_ratio(&paper).unwrap().mag, 3.95e-53, 0.005));
        let modern = ConstantSet::modern(50);
        assert!(close(
            &einstein_ratio(&modern).unwrap().mag,
            3.95e-53,
            0.005
        ));
        let mut doubled = modern.clone();
        doubled.insert("G", "13.3486e-8", "cm3.g-1.s-2").unwrap();
        let a = einstein_ratio(&modern).unwrap().mag;
        let b = einstein_ratio(&doubled).unwrap().mag;
        assert!((b / a).rel_diff(&p("2")) < PrecReal::tolerance(50, 40));
        let mut missing = modern.clone();
        missing.remove("m_h");
        assert_eq!(
            einstein_ratio(&missing),
            Err(FtrError::MissingConstant("m_h".into()))
        );
    }

    #[test]
    fn cosmic_pair_examples() {
        let f = solve_cosmic_pair(&q("3.95e-53 cm"), &q("1.9e-13 cm")).unwrap();
        assert!(close(f.n(), 2.31e79, 0.01));
        assert!(close(&f.r0().mag, 9.14e26, 0.01));
        let f = solve_cosmic_pair(&q("1 cm"), &q("2 cm")).unwrap();
        assert_eq!((f.n().clone(), f.r0().mag.clone()), (p("4"), p("4")));
        let f = solve_cosmic_pair(&q("1 cm"), &q("1 cm")).unwrap();
        assert_eq!((f.n().clone(), f.r0().mag.clone()), (p("1"), p("1")));
        assert!(solve_cosmic_pair(&q("0 cm"), &q("1 cm")).is_err());
    }

    #[test]
    fn carrier_range_examples() {
        let m = ConstantSet::modern(50);
        let pion = carrier_range(&q("139.57039 MeV"), &m).unwrap();
        assert_eq!(pion.dims, DimSig::length());
        assert!(close(&pion.mag, 0.707e-13, 0.002));
        let z = carrier_range(&q("91.1876 GeV"), &m).unwrap();
        assert!(close(&z.mag, 1.08e-16, 0.005));
        let heavy = carrier_range(&q("1e30 GeV"), &m).unwrap();
        assert!(heavy.mag < p("1e-40"));
        assert!(carrier_range(&q("1 cm"), &m).is_err());
    }

    #[test]
    fn projection_examples() {
        let f = CosmicFrame::new(p("2.31e79"), q("1 cm")).unwrap();
        let deficit = PrecReal::one(50) - projection_ratio(&f);
        assert!(close(&deficit, 1.04e-40, 0.01));
        let f = CosmicFrame::new(p("0.25"), q("1 cm")).unwrap();
        assert!(projection_ratio(&f).is_zero());
        let f = CosmicFrame::new(p("1e200"), q("1 cm")).unwrap();
        assert!(projection_ratio(&f).rel_diff(&p("1")) < p("1e-99"));
    }

    #[test]
    fn frame_consistency() {
        let f = CosmicFrame::new(p("2.3621586e79"), q("9.08e26 cm")).unwrap();
        let two = p("2");
        let tol = PrecReal::tolerance(50, 45);
        assert!((&f.sigma().mag * f.n().sqrt() * &two).rel_diff(&f.r0().mag) < tol);
        assert!(f.k().mag.rel_diff(&(&f.sigma().mag * &two)) < tol);
        assert!((&f.r0().mag * f.sigma_eps()).rel_diff(&f.sigma().mag) < tol);
    }
}
