//! Monte Carlo check of the centroid scaling: the mean of n coordinates
//! drawn with standard deviation R₀/2 scatters with R₀/(2√n).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{FtrError, Result};

const CHUNKS: u64 = 64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McReport {
    pub n_particles: u64,
    pub trials: u64,
    pub seed: u64,
    pub r0: f64,
    pub empirical_std: f64,
    pub predicted_std: f64,
    pub standard_error: f64,
    pub z_score: f64,
    pub passed: bool,
}

#[derive(Clone, Copy, Default)]
struct Moments {
    count: u64,
    sum: f64,
    sum_sq: f64,
}

impl Moments {
    fn merge(self, o: Moments) -> Moments {
        Moments {
            count: self.count + o.count,
            sum: self.sum + o.sum,
            sum_sq: self.sum_sq + o.sum_sq,
        }
    }
}

fn run_chunk(chunk: u64, trials: u64, n: u64, seed: u64, normal: Normal<f64>) -> Moments {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    let mut m = Moments::default();
    for _ in 0..trials {
        let mut s = 0.0;
        for _ in 0..n {
            s += normal.sample(&mut rng);
        }
        let centroid = s / n as f64;
        m.count += 1;
        m.sum += centroid;
        m.sum_sq += centroid * centroid;
    }
    m
}

pub fn mc_centroid(n_particles: u64, trials: u64, seed: u64, r0: f64) -> Result<McReport> {
    if n_particles == 0 {
        return Err(FtrError::Domain("need at least one particle".into()));
    }
    if trials < 100 {
        return Err(FtrError::Domain("need at least 100 trials".into()));
    }
    if !(r0.is_finite() && r0 > 0.0) {
        return Err(FtrError::NonPositiveInput("R0".into()));
    }
    let normal = Normal::new(0.0, r0 / 2.0).expect("positive std");
    let per = trials / CHUNKS;
    let extra = trials % CHUNKS;
    let parts: Vec<Moments> = (0..CHUNKS)
        .into_par_iter()
        .map(|c| {
            let t = per + u64::from(c < extra);
            run_chunk(c, t, n_particles, seed, normal)
        })
        .collect();
    let m = parts.into_iter().fold(Moments::default(), Moments::merge);
    let t = m.count as f64;
    let mean = m.sum / t;
    let var = (m.sum_sq - t * mean * mean) / (t - 1.0);
    let empirical_std = var.max(0.0).sqrt();
    let predicted_std = r0 / (2.0 * (n_particles as f64).sqrt());
    let standard_error = predicted_std / (2.0 * t).sqrt();
    let z_score = (empirical_std - predicted_std) / standard_error;
    Ok(McReport {
        n_particles,
        trials,
        seed,
        r0,
        empirical_std,
        predicted_std,
        standard_error,
        z_score,
        passed: z_score.abs() < 3.0,
    })
}
