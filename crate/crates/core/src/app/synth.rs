//! Synthetic trips with planted maneuvers, for tests and demos.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{Segment, TimeSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ManeuverKind {
    /// Single negative lobe.
    Brake,
    /// Single positive lobe.
    Acceleration,
    /// Negative lobe followed by a positive one.
    BrakeAccelerate,
    /// Positive lobe followed by a negative one (lateral S).
    LaneChange,
}

impl ManeuverKind {
    /// Template value at relative position `x` in `(0, 1)`, unit amplitude.
    fn shape(self, x: f64) -> f64 {
        use std::f64::consts::PI;
        match self {
            ManeuverKind::Brake => -(PI * x).sin(),
            ManeuverKind::Acceleration => (PI * x).sin(),
            ManeuverKind::BrakeAccelerate => -(2.0 * PI * x).sin(),
            ManeuverKind::LaneChange => (2.0 * PI * x).sin(),
        }
    }

    /// `duration` samples of the template scaled to `amplitude`.
    pub fn template(self, amplitude: f64, duration: usize) -> Vec<f64> {
        (0..duration)
            .map(|k| amplitude.abs() * self.shape((k as f64 + 0.5) / duration as f64))
            .collect()
    }
}

/// `count` instances of one template, each with a duration drawn uniformly
/// from `duration_min..=duration_max` samples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Maneuver {
    pub kind: ManeuverKind,
    /// Peak magnitude; the sign comes from `kind`.
    pub amplitude: f64,
    pub duration_min: usize,
    pub duration_max: usize,
    pub count: usize,
}

fn default_rate() -> f64 {
    10.0
}

fn default_gap() -> usize {
    20
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthSpec {
    pub length: usize,
    #[serde(default = "default_rate")]
    pub sample_rate_hz: f64,
    /// Standard deviation of the Gaussian baseline.
    pub noise_sigma: f64,
    /// Minimum number of baseline samples between maneuvers and before the
    /// first / after the last one.
    #[serde(default = "default_gap")]
    pub min_gap: usize,
    #[serde(default)]
    pub maneuvers: Vec<Maneuver>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlantedSegment {
    pub kind: ManeuverKind,
    pub segment: Segment,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SynthTrip {
    pub series: TimeSeries,
    /// Sorted by start.
    pub truth: Vec<PlantedSegment>,
}

/// Generates a trip from `spec`; identical `(spec, seed)` give identical
/// output.
pub fn synth_trip(spec: &SynthSpec, seed: u64) -> Result<SynthTrip> {
    let infeasible = |m: String| Err(Error::SpecInfeasible(m));
    if !(spec.noise_sigma.is_finite() && spec.noise_sigma >= 0.0) {
        return infeasible(format!("noise sigma {} must be >= 0", spec.noise_sigma));
    }
    if !(spec.sample_rate_hz.is_finite() && spec.sample_rate_hz > 0.0) {
        return infeasible(format!(
            "sample rate {} must be positive",
            spec.sample_rate_hz
        ));
    }
    for m in &spec.maneuvers {
        if !(m.amplitude.is_finite() && m.amplitude != 0.0) {
            return infeasible(format!("{:?} amplitude must be non-zero", m.kind));
        }
        if m.duration_min == 0 || m.duration_min > m.duration_max {
            return infeasible(format!(
                "{:?} durations {}..={} are empty",
                m.kind, m.duration_min, m.duration_max
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances: Vec<(ManeuverKind, f64, usize)> = Vec::new();
    for m in &spec.maneuvers {
        for _ in 0..m.count {
            let d = rng.random_range(m.duration_min..=m.duration_max);
            instances.push((m.kind, m.amplitude, d));
        }
    }
    instances.shuffle(&mut rng);

    let busy: usize =
        instances.iter().map(|i| i.2).sum::<usize>() + (instances.len() + 1) * spec.min_gap;
    if busy > spec.length {
        return infeasible(format!(
            "{} maneuvers need {busy} samples, trip has {}",
            instances.len(),
            spec.length
        ));
    }
    // spread the slack over the gaps at uniformly drawn cut points
    let slack = spec.length - busy;
    let mut cuts: Vec<usize> = (0..instances.len())
        .map(|_| rng.random_range(0..=slack))
        .collect();
    cuts.sort_unstable();

    let noise =
        Normal::new(0.0, spec.noise_sigma).map_err(|e| Error::SpecInfeasible(e.to_string()))?;
    let mut values: Vec<f64> = (0..spec.length).map(|_| noise.sample(&mut rng)).collect();
    let mut truth = Vec::with_capacity(instances.len());
    let mut cursor = 0;
    let mut used_slack = 0;
    for ((kind, amplitude, d), cut) in instances.into_iter().zip(cuts) {
        cursor += spec.min_gap + (cut - used_slack);
        used_slack = cut;
        for (v, t) in values[cursor..cursor + d]
            .iter_mut()
            .zip(kind.template(amplitude, d))
        {
            *v += t;
        }
        truth.push(PlantedSegment {
            kind,
            segment: Segment::new(cursor, d),
        });
        cursor += d;
    }
    Ok(SynthTrip {
        series: TimeSeries::new(values, spec.sample_rate_hz)?.with_name(format!("synth-{seed}")),
        truth,
    })
}
