//! Monte Carlo simulation of sphere-to-sphere random walks.
//!
//! Worker `w` of a run with master seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream `w`. Samples are split
//! as evenly as possible, the first `samples % workers` workers taking one
//! extra. Counts are summed, so a run is a function of (seed, workers).

use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceProfile, SphereIndex};
use crate::hypergroup::constants::StructureConstants;
use crate::scalar::Scalar;

pub const RNG_NAME: &str = "ChaCha8Rng (rand_chacha 0.9), seed_from_u64(seed), stream = worker index";
pub const Z_THRESHOLD: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkSpec {
    pub sequence: Vec<usize>,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
}

impl WalkSpec {
    pub fn new(sequence: &[usize], samples: u64, seed: u64) -> Self {
        WalkSpec { sequence: sequence.to_vec(), samples, seed, workers: 1 }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    fn validate(&self, size: usize) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Precondition("sample count must be positive".into()));
        }
        if self.workers == 0 {
            return Err(Error::Precondition("worker count must be positive".into()));
        }
        if self.sequence.is_empty() {
            return Err(Error::Precondition("jump sequence must be non-empty".into()));
        }
        if let Some(&bad) = self.sequence.iter().find(|&&s| s >= size) {
            return Err(Error::Precondition(format!("index {bad} outside I of size {size}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Scalar", deserialize = "T: Scalar"))]
pub struct EmpiricalDistribution<T> {
    pub counts: Vec<u64>,
    pub samples: u64,
    pub probabilities: Vec<f64>,
    #[serde(with = "crate::scalar::text_vec")]
    pub reference: Vec<T>,
    pub standard_errors: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub z_scores: Vec<f64>,
    pub suspicious: Vec<usize>,
    pub pass: bool,
}

/// Uniform index below `s` by multiply-shift, no rejection loop.
fn bounded(rng: &mut ChaCha8Rng, s: usize) -> usize {
    ((rng.next_u64() as u128 * s as u128) >> 64) as usize
}

fn worker_counts(
    spheres: &SphereIndex,
    profile: &DistanceProfile,
    sequence: &[usize],
    samples: u64,
    seed: u64,
    stream: u64,
) -> Result<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut counts = vec![0u64; profile.index_set_size()];
    for _ in 0..samples {
        let mut v = profile.base_point;
        for &i in sequence {
            let sphere = spheres.sphere(v, i);
            if sphere.is_empty() {
                return Err(Error::SphereEmpty { vertex: v, index: i });
            }
            v = sphere[bounded(&mut rng, sphere.len())];
        }
        counts[profile.distances_from_base[v]] += 1;
    }
    Ok(counts)
}

/// Tallies `d(v0, v_m)` over independent walks. The exact reference is the
/// left-nested convolution of `sc` along the sequence.
pub fn simulate<T: Scalar>(
    profile: &DistanceProfile,
    sc: &StructureConstants<T>,
    spec: &WalkSpec,
) -> Result<EmpiricalDistribution<T>> {
    let size = profile.index_set_size();
    spec.validate(size)?;
    let reference = sc.left_nested(&spec.sequence)?;
    let spheres = profile.all_pairs.sphere_index();

    let workers = spec.workers as u64;
    let share = |w: u64| spec.samples / workers + u64::from(w < spec.samples % workers);
    let parts: Vec<Result<Vec<u64>>> = if spec.workers == 1 {
        vec![worker_counts(&spheres, profile, &spec.sequence, spec.samples, spec.seed, 0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let spheres = &spheres;
                    scope.spawn(move || worker_counts(spheres, profile, &spec.sequence, share(w), spec.seed, w))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("walk worker panicked")).collect()
        })
    };

    let mut counts = vec![0u64; size];
    for part in parts {
        for (c, p) in counts.iter_mut().zip(part?) {
            *c += p;
        }
    }
    let n = spec.samples as f64;
    let probabilities: Vec<f64> = counts.iter().map(|&c| c as f64 / n).collect();
    let standard_errors = reference
        .iter()
        .map(|p| {
            let p = p.to_f64();
            (p * (1.0 - p) / n).max(0.0).sqrt()
        })
        .collect();
    Ok(EmpiricalDistribution { counts, samples: spec.samples, probabilities, reference, standard_errors })
}

/// Per-component z-scores against the binomial standard error. A component
/// with exact probability 0 or 1 scores 0 when the count matches exactly
/// and infinity otherwise.
pub fn compare<T: Scalar>(emp: &EmpiricalDistribution<T>) -> AgreementReport {
    let n = emp.samples as f64;
    let z_scores: Vec<f64> = emp
        .reference
        .iter()
        .zip(&emp.counts)
        .zip(&emp.standard_errors)
        .map(|((p, &c), &se)| {
            let expected = p.to_f64() * n;
            if se == 0.0 {
                if (c as f64 - expected).abs() < 0.5 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                (c as f64 / n - p.to_f64()) / se
            }
        })
        .collect();
    let suspicious: Vec<usize> = (0..z_scores.len()).filter(|&k| z_scores[k].abs() > Z_THRESHOLD).collect();
    AgreementReport { pass: suspicious.is_empty(), z_scores, suspicious }
}

/// Total-variation distance between the estimate and the reference.
pub fn total_variation<T: Scalar>(emp: &EmpiricalDistribution<T>) -> f64 {
    emp.probabilities.iter().zip(&emp.reference).map(|(q, p)| (q - p.to_f64()).abs()).sum::<f64>() / 2.0
}
