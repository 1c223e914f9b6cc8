//! Multiplicity, entropy and the Boltzmann distribution, together with the
//! occupation energetics of H⁰ = E⁰ + W⁰ and the rigid-coordinate
//! transform t′ = −kt.

use crate::error::{FtrError, Result};
use crate::numeric::{BigCount, ConstantSet, DimSig, ExactRational, PrecReal, Quantity};

/// M oscillators sharing q quanta.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EinsteinSolid {
    pub oscillators: u64,
    pub quanta: u64,
}

impl EinsteinSolid {
    pub fn new(oscillators: u64, quanta: u64) -> Result<Self> {
        if oscillators == 0 {
            return Err(FtrError::Domain("need at least one oscillator".into()));
        }
        Ok(EinsteinSolid {
            oscillators,
            quanta,
        })
    }

    /// Three oscillators per atom.
    pub fn from_atoms(atoms: u64, quanta: u64) -> Result<Self> {
        EinsteinSolid::new(3 * atoms, quanta)
    }
}

/// Ω = (q + M − 1)! / (q! (M − 1)!)
pub fn multiplicity(s: &EinsteinSolid) -> BigCount {
    BigCount::binomial(s.quanta + s.oscillators - 1, s.quanta)
}

/// S = k_B ln Ω
pub fn entropy(omega: &BigCount, constants: &ConstantSet) -> Result<Quantity> {
    if omega.value() == &num_bigint::BigUint::from(0u8) {
        return Err(FtrError::Domain("multiplicity must be at least 1".into()));
    }
    let kb = constants.get("k_B")?;
    let ln = omega.to_prec(constants.digits()).ln();
    Ok(kb.scale(&ln).labeled("S"))
}

/// Pr(E₁)/Pr(E₀) = Ω₁/Ω₀
pub fn prob_ratio(omega1: &BigCount, omega0: &BigCount, digits: u32) -> Result<PrecReal> {
    if omega0.value() == &num_bigint::BigUint::from(0u8) {
        return Err(FtrError::Domain(
            "reference multiplicity must be at least 1".into(),
        ));
    }
    Ok(omega1.to_prec(digits) / omega0.to_prec(digits))
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateEnergies {
    pub energies: Vec<Quantity>,
    pub temperature: Quantity,
}

/// Pr(Eᵢ) = e^{−Eᵢ/k_BT} / Z
pub fn boltzmann(states: &StateEnergies, constants: &ConstantSet) -> Result<Vec<PrecReal>> {
    states.temperature.expect_dims(DimSig::temperature())?;
    if !states.temperature.is_positive() {
        return Err(FtrError::NonPositiveInput("temperature".into()));
    }
    if states.energies.is_empty() {
        return Ok(Vec::new());
    }
    let kt = constants.get("k_B")?.mul(&states.temperature);
    for e in &states.energies {
        e.expect_dims(DimSig::energy())?;
    }
    let min = states
        .energies
        .iter()
        .map(|e| e.mag.clone())
        .reduce(PrecReal::min)
        .expect("non-empty");
    let weights: Vec<PrecReal> = states
        .energies
        .iter()
        .map(|e| (-((&e.mag - &min) / &kt.mag)).exp())
        .collect();
    let z = weights
        .iter()
        .fold(PrecReal::zero(constants.digits()), |acc, w| acc + w);
    Ok(weights.into_iter().map(|w| w / &z).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub enum OccupationModel {
    /// H⁰ homogeneous of degree n in the momenta.
    Degree { n: PrecReal, h0: Quantity },
    /// Multiplicity k and dimension-index l; k = −1 is the relativity particle.
    ScaleFree { k: i64, l: i64, e0: Quantity },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Occupation {
    pub e0: Quantity,
    pub w0: Quantity,
    pub h0: Quantity,
}

pub fn occupation_split(model: &OccupationModel) -> Result<Occupation> {
    match model {
        OccupationModel::Degree { n, h0 } => {
            let one = PrecReal::one(n.digits());
            Ok(Occupation {
                e0: h0.scale(n),
                w0: h0.scale(&(one - n)),
                h0: h0.clone(),
            })
        }
        OccupationModel::ScaleFree { k, l, e0 } => {
            if *l == 0 {
                return Err(FtrError::ZeroL);
            }
            if *k == 0 || *k < -1 {
                return Err(FtrError::NonPositiveMultiplicity);
            }
            let w = ExactRational::new(-(l + k), *l);
            let h = ExactRational::new(-k, *l);
            Ok(Occupation {
                e0: e0.clone(),
                w0: e0.scale_ratio(&w),
                h0: e0.scale_ratio(&h),
            })
        }
    }
}

/// H of the top particle from the mean H over k-fold occupation: −H̄/k.
pub fn top_vs_mean(h_mean: &Quantity, k: i64) -> Result<Quantity> {
    if k == 0 {
        return Err(FtrError::ZeroMultiplicity);
    }
    Ok(h_mean.scale_ratio(&ExactRational::new(-1, k)))
}

/// m₂ = m₁ k₁ / k₂
pub fn mass_from_multiplicity(m1: &Quantity, k1: i64, k2: i64) -> Result<Quantity> {
    if k1 < 1 || k2 < 1 {
        return Err(FtrError::NonPositiveMultiplicity);
    }
    Ok(m1.scale_ratio(&ExactRational::new(k1, k2)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RigidFrame {
    pub x: PrecReal,
    pub y: PrecReal,
    pub z: PrecReal,
    pub t: PrecReal,
    pub k: i64,
    /// k²
    pub g44: PrecReal,
    /// √(−g) = −k
    pub sqrt_neg_g: PrecReal,
}

impl RigidFrame {
    /// Galilean energy component from its rigid counterpart, p₄ = −k p₄′.
    pub fn galilean_p4(&self, p4_rigid: &PrecReal) -> PrecReal {
        -(PrecReal::from_i64(self.k, p4_rigid.digits()) * p4_rigid)
    }

    /// Rigid energy component, p₄′ = −p₄/k.
    pub fn rigid_p4(&self, p4: &PrecReal) -> PrecReal {
        -(p4 / PrecReal::from_i64(self.k, p4.digits()))
    }
}

/// x′ = x, y′ = y, z′ = z, t′ = −kt.
pub fn rigid_transform(
    x: &PrecReal,
    y: &PrecReal,
    z: &PrecReal,
    t: &PrecReal,
    k: i64,
) -> Result<RigidFrame> {
    if k == 0 {
        return Err(FtrError::ZeroMultiplicity);
    }
    let kk = PrecReal::from_i64(k, t.digits());
    Ok(RigidFrame {
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
        t: -(&kk * t),
        k,
        g44: &kk * &kk,
        sqrt_neg_g: -kk,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::DEFAULT_DIGITS;
    use num_bigint::BigUint;

    const D: u32 = DEFAULT_DIGITS;

    fn count(n: u64) -> BigCount {
        BigCount::new(BigUint::from(n))
    }

    /// Number of ways to put q indistinguishable quanta into m slots,
    /// counted by walking every composition.
    fn enumerate(m: u64, q: u64) -> u64 {
        if m == 1 {
            return 1;
        }
        (0..=q).map(|first| enumerate(m - 1, q - first)).sum()
    }

    #[test]
    fn multiplicity_examples() {
        for m in 1..5 {
            assert_eq!(multiplicity(&EinsteinSolid::new(m, 0).unwrap()), count(1));
        }
        assert_eq!(
            multiplicity(&EinsteinSolid::from_atoms(2, 2).unwrap()),
            count(21)
        );
        assert_eq!(multiplicity(&EinsteinSolid::new(3, 3).unwrap()), count(10));
        assert!(EinsteinSolid::new(0, 3).is_err());
    }

    #[test]
    fn multiplicity_matches_enumeration() {
        for m in 1..=8 {
            for q in 0..=8 {
                let s = EinsteinSolid::new(m, q).unwrap();
                assert_eq!(multiplicity(&s), count(enumerate(m, q)), "M={m} q={q}");
            }
        }
    }

    #[test]
    fn vandermonde() {
        for ma in 1..=6 {
            for mb in 1..=6 {
                for q in 0..=6 {
                    let mut sum = count(0);
                    for qa in 0..=q {
                        let a = multiplicity(&EinsteinSolid::new(ma, qa).unwrap());
                        let b = multiplicity(&EinsteinSolid::new(mb, q - qa).unwrap());
                        sum = &sum + &(&a * &b);
                    }
                    let merged = multiplicity(&EinsteinSolid::new(ma + mb, q).unwrap());
                    assert_eq!(sum, merged);
                }
            }
        }
    }

    #[test]
    fn entropy_examples() {
        let m = ConstantSet::modern(D);
        let kb = m.get("k_B").unwrap();
        assert!(entropy(&count(1), &m).unwrap().mag.is_zero());
        let s = entropy(&count(21), &m).unwrap();
        assert_eq!(s.dims, kb.dims);
        let expect = &kb.mag * PrecReal::from_i64(21, D).ln();
        assert!(s.mag.rel_diff(&expect) < PrecReal::tolerance(D, 45));
        // ⌊e⌋ and ⌈e⌉ bracket k_B
        assert!(entropy(&count(2), &m).unwrap().mag < kb.mag);
        assert!(entropy(&count(3), &m).unwrap().mag > kb.mag);
        assert!(entropy(&count(0), &m).is_err());
    }

    #[test]
    fn prob_ratio_examples() {
        assert_eq!(
            prob_ratio(&count(7), &count(7), D).unwrap(),
            PrecReal::one(D)
        );
        let r = prob_ratio(&count(21), &count(10), D).unwrap();
        assert!(
            r.rel_diff(&PrecReal::parse_decimal("2.1", D).unwrap()) < PrecReal::tolerance(D, 45)
        );
        let m = ConstantSet::modern(D);
        let ds = entropy(&count(21), &m).unwrap().mag - entropy(&count(10), &m).unwrap().mag;
        let via_s = (ds / m.get("k_B").unwrap().mag).exp();
        assert!(via_s.rel_diff(&r) < PrecReal::tolerance(D, 40));
    }

    fn states(energies: &[PrecReal], t: &str) -> StateEnergies {
        StateEnergies {
            energies: energies
                .iter()
                .map(|e| Quantity::new(e.clone(), DimSig::energy()))
                .collect(),
            temperature: Quantity::parse(t, D).unwrap(),
        }
    }

    #[test]
    fn boltzmann_examples() {
        let m = ConstantSet::modern(D);
        let kb = m.get("k_B").unwrap().mag;
        let e0 = PrecReal::parse_decimal("1e-14", D).unwrap();
        let p = boltzmann(&states(&[e0.clone(), e0.clone()], "300 K"), &m).unwrap();
        let half = PrecReal::parse_decimal("0.5", D).unwrap();
        assert!(p
            .iter()
            .all(|x| x.rel_diff(&half) < PrecReal::tolerance(D, 45)));

        let t = PrecReal::from_i64(300, D);
        let e1 = &e0 + &kb * &t * PrecReal::from_i64(2, D).ln();
        let p = boltzmann(&states(&[e0.clone(), e1], "300 K"), &m).unwrap();
        assert!((&p[1] / &p[0]).rel_diff(&half) < PrecReal::tolerance(D, 40));

        let es: Vec<PrecReal> = (0..5).map(|i| PrecReal::from_i64(i, D)).collect();
        let p = boltzmann(&states(&es, "1e40 K"), &m).unwrap();
        let fifth = PrecReal::parse_decimal("0.2", D).unwrap();
        assert!(p
            .iter()
            .all(|x| x.rel_diff(&fifth) < PrecReal::tolerance(D, 20)));
        let sum = p.iter().fold(PrecReal::zero(D), |a, x| a + x);
        assert!(sum.rel_diff(&PrecReal::one(D)) < PrecReal::tolerance(D, D as i64 - 5));

        assert!(boltzmann(&states(&es, "0 K"), &m).is_err());
    }

    #[test]
    fn boltzmann_handles_wide_spread() {
        let m = ConstantSet::modern(D);
        let es = [
            PrecReal::from_i64(0, D),
            PrecReal::parse_decimal("1e10", D).unwrap(),
        ];
        let p = boltzmann(&states(&es, "1 K"), &m).unwrap();
        assert_eq!(p[0], PrecReal::one(D));
        assert!(p[1].is_zero() || p[1] < PrecReal::tolerance(D, 1000));
    }

    #[test]
    fn occupation_examples() {
        let unit = Quantity::new(PrecReal::one(D), DimSig::energy());
        let o = occupation_split(&OccupationModel::Degree {
            n: PrecReal::one(D),
            h0: unit.clone(),
        })
        .unwrap();
        assert!(o.w0.mag.is_zero());
        assert_eq!(o.e0, o.h0);

        let o = occupation_split(&OccupationModel::ScaleFree {
            k: 136,
            l: 1,
            e0: unit.clone(),
        })
        .unwrap();
        assert_eq!(o.w0.mag, PrecReal::from_i64(-137, D));
        assert_eq!(o.h0.mag, PrecReal::from_i64(-136, D));
        assert_eq!(o.h0.mag, &o.e0.mag + &o.w0.mag);

        let o = occupation_split(&OccupationModel::ScaleFree {
            k: -1,
            l: 1,
            e0: unit.clone(),
        })
        .unwrap();
        assert!(o.w0.mag.is_zero());
        assert_eq!(o.h0.mag, o.e0.mag);

        assert_eq!(
            occupation_split(&OccupationModel::ScaleFree {
                k: 3,
                l: 0,
                e0: unit
            }),
            Err(FtrError::ZeroL)
        );
    }

    #[test]
    fn top_vs_mean_examples() {
        let q = |v: i64| Quantity::new(PrecReal::from_i64(v, D), DimSig::energy());
        assert_eq!(top_vs_mean(&q(1), -1).unwrap().mag, PrecReal::one(D));
        assert_eq!(
            top_vs_mean(&q(136), 136).unwrap().mag,
            PrecReal::from_i64(-1, D)
        );
        assert_eq!(top_vs_mean(&q(1), 0), Err(FtrError::ZeroMultiplicity));
    }

    #[test]
    fn mass_multiplicity_examples() {
        let m = Quantity::new(PrecReal::from_i64(3, D), DimSig::mass());
        assert_eq!(mass_from_multiplicity(&m, 5, 5).unwrap(), m);
        let m3 = mass_from_multiplicity(&m, 4, 3).unwrap();
        assert_eq!(m3.mag, PrecReal::from_i64(4, D));
        assert_eq!(
            mass_from_multiplicity(&m, 0, 3),
            Err(FtrError::NonPositiveMultiplicity)
        );
        // π R³ against (4/3) π R³
        let ratio = &ExactRational::integer(1) / &ExactRational::new(4, 3);
        assert_eq!(ratio, ExactRational::new(3, 4));
    }

    #[test]
    fn rigid_examples() {
        let z = PrecReal::zero(D);
        let one = PrecReal::one(D);
        let f = rigid_transform(&z, &z, &z, &one, 1).unwrap();
        assert_eq!(f.t, PrecReal::from_i64(-1, D));
        assert_eq!(f.g44, one);
        let f = rigid_transform(&z, &z, &z, &one, 137).unwrap();
        assert_eq!(f.t, PrecReal::from_i64(-137, D));
        assert_eq!(f.sqrt_neg_g, PrecReal::from_i64(-137, D));
        let p4 = PrecReal::parse_decimal("8.2e-7", D).unwrap();
        let back = f.galilean_p4(&f.rigid_p4(&p4));
        assert!(back.rel_diff(&p4) < PrecReal::tolerance(D, 45));
        assert!(rigid_transform(&z, &z, &z, &one, 0).is_err());
    }
}
