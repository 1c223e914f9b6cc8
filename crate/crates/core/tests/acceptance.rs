//! Acceptance suite: one line per criterion, at the stated tolerances.
//!
//! Known failures are listed in `EXPECTED_FAIL`. They are still evaluated at
//! full tolerance and reported as FAIL; the run aborts only on an unexpected
//! failure or an unexpected pass.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ftr_core::chain::{
    derive_g, force_constant, mass_ratio_current, mass_ratio_standard, photon_momentum_identity,
    recession, theoretical_n,
};
use ftr_core::exclusion::{
    degeneracy_k, non_coulomb_energy, proper_mass, proper_mass_from_exclusion, sigma_from_m,
    weight_constant, KForm,
};
use ftr_core::geometry::{
    carrier_range, einstein_ratio, fluctuation_split, solve_cosmic_pair, CosmicFrame,
};
use ftr_core::montecarlo::mc_centroid;
use ftr_core::numeric::{
    natural_value, rounded_basis, ConstantSet, ExactRational, PrecReal, Quantity, DEFAULT_DIGITS,
};
use ftr_core::quantum::{uncertainty_bound, C2Matrix, C2State, Complex};
use ftr_core::statmech::{boltzmann, multiplicity, EinsteinSolid, StateEnergies};
use ftr_core::zoo::{max_family, named_witness, Family};

const D: u32 = DEFAULT_DIGITS;

/// Paper-era σ at 0.1%: the 1946-vintage ħ/(m_h c) gives 9.5985e-14 cm.
const EXPECTED_FAIL: &[&str] = &["8a"];

struct Outcome {
    id: &'static str,
    passed: bool,
    detail: String,
}

fn q(s: &str) -> Quantity {
    Quantity::parse(s, D).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn within(x: f64, target: f64, tol: f64) -> bool {
    rel(x, target) <= tol
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn c1() -> Outcome {
    let (frame, dt) = timed(|| solve_cosmic_pair(&q("3.95e-53 cm"), &q("1.9e-13 cm")).unwrap());
    let n = frame.n().to_f64();
    let r0 = frame.r0().in_unit("cm").unwrap().to_f64();
    Outcome {
        id: "1",
        passed: within(n, 2.31e79, 0.01)
            && within(r0, 9.14e26, 0.01)
            && dt < Duration::from_secs(1),
        detail: format!("cosmic pair N = {n:.4e}, R0 = {r0:.4e} cm in {dt:?}"),
    }
}

fn c2() -> Outcome {
    let r = einstein_ratio(&ConstantSet::paper_era(D))
        .unwrap()
        .mag
        .to_f64();
    Outcome {
        id: "2",
        passed: within(r, 3.95e-53, 0.005),
        detail: format!("Einstein ratio R0/N = {r:.5e} cm"),
    }
}

/// 204·2²⁵⁶ by schoolbook doubling on base-10 digits.
fn decimal_oracle() -> String {
    let mut digits = vec![4u8, 0, 2]; // 204, least significant first
    for _ in 0..256 {
        let mut carry = 0;
        for d in digits.iter_mut() {
            let v = *d * 2 + carry;
            *d = v % 10;
            carry = v / 10;
        }
        if carry > 0 {
            digits.push(carry);
        }
    }
    digits.iter().rev().map(|d| char::from(b'0' + d)).collect()
}

fn c3() -> Outcome {
    let n = theoretical_n(D);
    let exact = n.exact.value().to_string();
    let oracle = decimal_oracle();
    let from_pow = BigUint::from(204u32) * BigUint::from(2u32).pow(256);
    let dec = n.decimal.to_f64();
    Outcome {
        id: "3",
        passed: exact == oracle && *n.exact.value() == from_pow && within(dec, 2.362e79, 1e-4),
        detail: format!(
            "N = 204*2^256 = {}... ({} digits), decimal {dec:.4e}",
            &exact[..8],
            exact.len()
        ),
    }
}

fn c4() -> Outcome {
    let m = ConstantSet::modern(D);
    let (row, dt) = timed(|| derive_g(&theoretical_n(D).exact, &m).unwrap());
    let g = row.computed.mag.to_f64();
    Outcome {
        id: "4",
        passed: within(g, 6.6665e-8, 0.002) && dt < Duration::from_secs(1),
        detail: format!(
            "G = {g:.5e} cgs ({:.3}% from 6.6665e-8) in {dt:?}",
            100.0 * rel(g, 6.6665e-8)
        ),
    }
}

fn c5() -> Outcome {
    let (e1, e2) = mass_ratio_standard(D).unwrap();
    let (e1c, e2c) = mass_ratio_current(D).unwrap();
    let (e2, e1c, e2c) = (e2.to_f64(), e1c.to_f64(), e2c.to_f64());
    Outcome {
        id: "5",
        passed: e1 == ExactRational::new(18496, 10)
            && (e2 - 1847.6).abs() <= 0.05
            && (e1c - 1838.34).abs() <= 0.01
            && (e2c - 1836.34).abs() <= 0.01,
        detail: format!("eta1 = {e1}, eta2 = {e2:.4}, eta1' = {e1c:.4}, eta2' = {e2c:.4}"),
    }
}

fn c6() -> Outcome {
    let m = ConstantSet::modern(D);
    let v = recession(&q("1.921e-13 cm"), &theoretical_n(D).decimal, &m).unwrap();
    let kms = v.in_unit("km.s-1.Mpc-1").unwrap().to_f64();
    Outcome {
        id: "6",
        passed: (kms - 572.0).abs() <= 2.0,
        detail: format!("V0 = {kms:.2} km/s/Mpc (paper 572.4)"),
    }
}

fn c7() -> Outcome {
    let m = ConstantSet::modern(D);
    let n = theoretical_n(D).decimal;
    let (t, d) = force_constant(&n, &m).unwrap();
    let (t, d) = (t.to_f64(), d.to_f64());
    // the theory path scales as sqrt(N)
    let (t4, _) = force_constant(&(&n * PrecReal::from_i64(4, D)), &m).unwrap();
    Outcome {
        id: "7",
        passed: rel(t, d) <= 0.01
            && within(t, 2.27e39, 0.01)
            && within(d, 2.27e39, 0.01)
            && within(t4.to_f64() / t, 2.0, 1e-12),
        detail: format!("force constant theory {t:.4e}, direct {d:.4e}"),
    }
}

fn c8() -> Vec<Outcome> {
    let s = |set: &ConstantSet| {
        sigma_from_m(&set.get("m_h").unwrap(), set)
            .unwrap()
            .in_unit("cm")
            .unwrap()
            .to_f64()
    };
    let old = s(&ConstantSet::paper_era(D));
    let new = s(&ConstantSet::modern(D));
    vec![
        Outcome {
            id: "8a",
            passed: within(old, 9.53657e-14, 0.001),
            detail: format!(
                "sigma paper-era = {old:.5e} cm ({:.3}% from 9.53657e-14, needs 0.1%)",
                100.0 * rel(old, 9.53657e-14)
            ),
        },
        Outcome {
            id: "8b",
            passed: within(new, 9.53657e-14, 0.01),
            detail: format!(
                "sigma modern = {new:.5e} cm ({:.3}%, needs 1%)",
                100.0 * rel(new, 9.53657e-14)
            ),
        },
    ]
}

fn cosmic_frame() -> CosmicFrame {
    let n = theoretical_n(D).decimal;
    let r0 = q("1.921e-13 cm").scale(&n.sqrt());
    CosmicFrame::new(n, r0).unwrap()
}

fn c9() -> Outcome {
    let m = ConstantSet::modern(D);
    let frame = cosmic_frame();
    let a = proper_mass(&frame, &m, false).unwrap();
    let b = proper_mass_from_exclusion(&frame, &m).unwrap();
    let diff = a.m0.mag.rel_diff(&b.m0.mag);
    let identity = ExactRational::new(3, 4) * ExactRational::new(3, 5) == ExactRational::new(9, 20);
    let obs = proper_mass(&frame, &m, true).unwrap();
    let mh = m.get("m_h").unwrap().mag.to_f64();
    let big_m = obs.big_m.mag.to_f64();
    Outcome {
        id: "9",
        passed: diff <= PrecReal::tolerance(D, 40) && identity && within(big_m, mh, 0.02),
        detail: format!(
            "two-path m0 rel diff {:.1e}; M = {big_m:.5e} g vs m_h {mh:.5e} g",
            diff.to_f64()
        ),
    }
}

fn modern_sigma(m: &ConstantSet) -> Quantity {
    sigma_from_m(&m.get("m_h").unwrap(), m).unwrap()
}

fn c10() -> Outcome {
    let m = ConstantSet::modern(D);
    let w = weight_constant(&modern_sigma(&m), &m)
        .unwrap()
        .electron_units
        .to_f64();
    Outcome {
        id: "10",
        passed: (w - 202.0).abs() <= 3.0,
        detail: format!("weight constant = {w:.2} m_e c^2"),
    }
}

fn c11() -> Outcome {
    let m = ConstantSet::modern(D);
    let nc = non_coulomb_energy(&q("0 cm"), &modern_sigma(&m), &m, true).unwrap();
    let mec2 = m.get("m_e").unwrap().mul(&m.get("c").unwrap().powi(2));
    let a = (&nc.amplitude.mag / &mec2.mag).to_f64();
    Outcome {
        id: "11",
        passed: (a - 52.4).abs() <= 1.0 && (a - 52.01).abs() <= 1.0 && (a - 52.26).abs() <= 1.0,
        detail: format!("A = {a:.3} m_e c^2 (derived 52.01, observed 52.26)"),
    }
}

fn c12() -> Outcome {
    let mut m = ConstantSet::modern(D);
    m.remove("hbar");
    let me = m.get("m_e").unwrap();
    let p = degeneracy_k(&me, &m, KForm::Paper).unwrap();
    let n = degeneracy_k(&me, &m, KForm::Modern).unwrap();
    let d = p.mag.rel_diff(&n.mag);
    Outcome {
        id: "12",
        passed: d <= PrecReal::tolerance(D, D as i64 - 5),
        detail: format!(
            "K = {} erg cm^2, forms differ by {:.1e}",
            p.mag.to_sci(4),
            d.to_f64()
        ),
    }
}

fn c13() -> Outcome {
    let m = ConstantSet::modern(D);
    let pion = carrier_range(&q("139.57039 MeV"), &m).unwrap().mag.to_f64();
    let z = carrier_range(&q("91.1876 GeV"), &m).unwrap().mag.to_f64();
    Outcome {
        id: "13",
        passed: within(pion, 0.707e-13, 0.005)
            && within(pion, 0.73e-13, 0.04)
            && (1e-17..1e-15).contains(&z),
        detail: format!("pion range {pion:.4e} cm, Z range {z:.3e} cm"),
    }
}

fn c14() -> Outcome {
    let basis = rounded_basis(D);
    let (kg, power) = natural_value(&q("1 kg"), &basis).unwrap();
    let kg = kg.to_f64();
    let id = photon_momentum_identity(&basis).unwrap();
    let c = id.c_value.to_f64();
    Outcome {
        id: "14",
        passed: within(kg, 8.540e50, 0.001) && power == -1 && (c - 1.0).abs() <= 0.01,
        detail: format!("1 kg = {kg:.4e} s^{power}; photon C = {c:.4}"),
    }
}

fn c15() -> Outcome {
    let (sol, dt) = timed(|| max_family(true));
    let witness: Vec<_> = named_witness().into_iter().map(|(_, p)| p).collect();
    let fam = Family {
        members: witness
            .iter()
            .map(|p| (*p, p.classify().unwrap()))
            .collect(),
    };
    let winners_ok = sol.families.iter().all(|f| {
        f.winners()
            .iter()
            .all(|(p, g)| *g == ftr_core::zoo::Gender::Boy && p.score() == 4)
    });
    let comp_ok = sol.families.iter().all(|f| f.boys() == 3 && f.girls() == 2);
    Outcome {
        id: "15",
        passed: sol.size == 5
            && comp_ok
            && winners_ok
            && fam.is_compatible()
            && dt < Duration::from_secs(5),
        detail: format!(
            "max mixed family {} over {} families, witness compatible: {}, in {dt:?}",
            sol.size,
            sol.families.len(),
            fam.is_compatible()
        ),
    }
}

/// Compositions of q quanta into m ordered oscillators, counted one by one.
fn enumerate(m: u64, q: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    (0..=q).map(|first| enumerate(m - 1, q - first)).sum()
}

/// Trapezoid convolution of compound and extraordinary densities on a grid,
/// compared with the ordinary density.
fn convolution_sup_error(n0: f64, n: f64) -> f64 {
    let split = fluctuation_split(&PrecReal::from_f64(n0, D), &PrecReal::from_f64(n, D)).unwrap();
    let span = 12.0 * n0.sqrt();
    let points = 10_000;
    let h = 2.0 * span / (points - 1) as f64;
    let grid: Vec<f64> = (0..points).map(|i| -span + i as f64 * h).collect();
    let a: Vec<f64> = grid.iter().map(|&x| split.compound.density(x)).collect();
    let mut worst: f64 = 0.0;
    for &y in grid.iter().step_by(50) {
        let mut s = 0.0;
        for (i, &x) in grid.iter().enumerate() {
            let w = if i == 0 || i == points - 1 { 0.5 } else { 1.0 };
            s += w * a[i] * split.extraordinary.density(y - x);
        }
        worst = worst.max((s * h - split.ordinary.density(y)).abs());
    }
    worst
}

fn random_hermitian(rng: &mut ChaCha8Rng, d: u32) -> C2Matrix {
    let mut r = || PrecReal::from_f64(rng.gen_range(-1.0..1.0), d);
    let (a, b, x, y) = (r(), r(), r(), r());
    C2Matrix::new(
        Complex::real(a),
        Complex::new(x.clone(), y.clone()),
        Complex::new(x, -y),
        Complex::real(b),
    )
}

fn c16() -> Vec<Outcome> {
    let mut out = Vec::new();

    let mut mult_ok = true;
    for m in 1..=8 {
        for qn in 0..=8 {
            let count = multiplicity(&EinsteinSolid::new(m, qn).unwrap());
            mult_ok &= *count.value() == BigUint::from(enumerate(m, qn));
        }
    }
    out.push(Outcome {
        id: "16a",
        passed: mult_ok,
        detail: "multiplicity equals enumeration for M <= 8, q <= 8".into(),
    });

    let m = ConstantSet::modern(D);
    let states = StateEnergies {
        energies: ["0 eV", "0.01 eV", "0.025 eV", "0.1 eV", "1 eV"]
            .iter()
            .map(|s| q(s))
            .collect(),
        temperature: q("300 K"),
    };
    let probs = boltzmann(&states, &m).unwrap();
    let total = probs.iter().fold(PrecReal::zero(D), |acc, p| acc + p);
    let sum_err = total.rel_diff(&PrecReal::one(D)).to_f64();
    out.push(Outcome {
        id: "16b",
        passed: sum_err <= 1e-40,
        detail: format!("Boltzmann probabilities sum to 1 within {sum_err:.1e}"),
    });

    let conv = convolution_sup_error(100.0, 1000.0);
    out.push(Outcome {
        id: "16c",
        passed: conv <= 1e-6,
        detail: format!("fluctuation convolution sup-norm error {conv:.2e}"),
    });

    let mut mc_ok = true;
    let mut zs = Vec::new();
    for n in [100u64, 1_000, 10_000] {
        let r = mc_centroid(n, 4_000, 11, 1.0).unwrap();
        mc_ok &= r.passed && r.z_score.abs() < 3.0;
        zs.push(format!("n={n}: z={:+.2}", r.z_score));
    }
    out.push(Outcome {
        id: "16d",
        passed: mc_ok,
        detail: format!("Monte Carlo centroid std, {}", zs.join(", ")),
    });

    let d = 30;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = f64::INFINITY;
    let mut robertson_ok = true;
    for _ in 0..1000 {
        let a = random_hermitian(&mut rng, d);
        let b = random_hermitian(&mut rng, d);
        let mut c = || PrecReal::from_f64(rng.gen_range(-1.0..1.0), d);
        let state = C2State::new(Complex::new(c(), c()), Complex::new(c(), c()))
            .normalized()
            .unwrap();
        let (lhs, rhs) = uncertainty_bound(&state, &a, &b).unwrap();
        let slack = &lhs - &rhs;
        robertson_ok &= !(slack.is_negative() && slack.abs() > PrecReal::tolerance(d, 20));
        worst = worst.min(slack.to_f64());
    }
    out.push(Outcome {
        id: "16e",
        passed: robertson_ok,
        detail: format!("uncertainty bound on 1000 random cases, min slack {worst:.2e}"),
    });
    out
}

fn main() {
    let mut outcomes = vec![c1(), c2(), c3(), c4(), c5(), c6(), c7()];
    outcomes.extend(c8());
    outcomes.extend([c9(), c10(), c11(), c12(), c13(), c14(), c15()]);
    outcomes.extend(c16());

    let mut unexpected = Vec::new();
    for o in &outcomes {
        let expected_fail = EXPECTED_FAIL.contains(&o.id);
        let tag = match (o.passed, expected_fail) {
            (true, false) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
            (true, true) => "PASS (unexpected)",
        };
        println!("criterion {:<4} {:<18} {}", o.id, tag, o.detail);
        if o.passed == expected_fail {
            unexpected.push(o.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes: {unexpected:?}");
        std::process::exit(1);
    }
}
