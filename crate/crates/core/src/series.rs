//! Time-series container, segment arithmetic, global normalization and PAA.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A uniformly sampled scalar signal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    values: Vec<f64>,
    sample_rate_hz: f64,
    name: String,
}

impl TimeSeries {
    /// Builds a series, rejecting non-finite samples and non-positive rates.
    pub fn new(values: Vec<f64>, sample_rate_hz: f64) -> Result<Self> {
        if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
            return Err(Error::InvalidValue(format!(
                "sample rate must be positive, got {sample_rate_hz}"
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidValue(format!(
                "non-finite sample at index {i}"
            )));
        }
        Ok(TimeSeries {
            values,
            sample_rate_hz,
            name: String::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn duration_s(&self) -> f64 {
        self.values.len() as f64 / self.sample_rate_hz
    }

    /// Seconds from the start of the trip to sample `index`.
    pub fn seconds(&self, index: usize) -> f64 {
        index as f64 / self.sample_rate_hz
    }

    /// Samples covered by `segment`; panics if it is out of bounds.
    pub fn slice(&self, segment: Segment) -> &[f64] {
        &self.values[segment.start..segment.end()]
    }

    pub fn get(&self, segment: Segment) -> Option<&[f64]> {
        self.values.get(segment.start..segment.end())
    }
}

/// A contiguous, half-open range `[start, start + length)` of sample indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Segment {
    pub start: usize,
    pub length: usize,
}

impl Segment {
    pub fn new(start: usize, length: usize) -> Self {
        debug_assert!(length >= 1, "segments cover at least one sample");
        Segment { start, length }
    }

    pub fn end(&self) -> usize {
        self.start + self.length
    }

    pub fn overlaps(&self, other: &Segment) -> bool {
        overlap(*self, *other)
    }

    /// Number of samples shared with `other`.
    pub fn intersection_len(&self, other: &Segment) -> usize {
        let lo = self.start.max(other.start);
        let hi = self.end().min(other.end());
        hi.saturating_sub(lo)
    }

    pub fn shifted(&self, offset: usize) -> Segment {
        Segment::new(self.start + offset, self.length)
    }

    pub fn check_within(&self, series_len: usize) -> Result<()> {
        if self.length == 0 || self.end() > series_len {
            return Err(Error::SegmentOutOfBounds {
                start: self.start,
                length: self.length,
                series_len,
            });
        }
        Ok(())
    }
}

/// True iff the half-open intervals of `a` and `b` intersect.
pub fn overlap(a: Segment, b: Segment) -> bool {
    a.start < b.end() && b.start < a.end()
}

/// Result of [`zscore_global`]: the normalized series plus the statistics
/// needed to map values back to input units.
#[derive(Debug, Clone, PartialEq)]
pub struct Normalized {
    pub series: TimeSeries,
    pub mean: f64,
    pub std: f64,
}

impl Normalized {
    pub fn to_input_units(&self, z: f64) -> f64 {
        z * self.std + self.mean
    }
}

/// Z-normalizes the whole series with its mean and population standard
/// deviation.
pub fn zscore_global(ts: &TimeSeries) -> Result<Normalized> {
    let n = ts.len();
    if n < 2 {
        return Err(Error::SeriesTooShort { len: n, needed: 2 });
    }
    let mean = ts.values.iter().sum::<f64>() / n as f64;
    let var = ts.values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n as f64;
    let std = var.sqrt();
    // Rounding can leave a tiny positive variance on constant input.
    if std <= f64::EPSILON * mean.abs().max(1.0) {
        return Err(Error::ConstantSeries);
    }
    let values = ts.values.iter().map(|v| (v - mean) / std).collect();
    Ok(Normalized {
        series: TimeSeries {
            values,
            sample_rate_hz: ts.sample_rate_hz,
            name: ts.name.clone(),
        },
        mean,
        std,
    })
}

/// Piecewise aggregate approximation: means of `paa_size` equal-length
/// frames of `segment`.
pub fn paa(values: &[f64], segment: Segment, paa_size: usize) -> Result<Vec<f64>> {
    segment.check_within(values.len())?;
    if paa_size == 0 || !segment.length.is_multiple_of(paa_size) {
        return Err(Error::IndivisibleSegment {
            length: segment.length,
            paa_size,
        });
    }
    let frame = segment.length / paa_size;
    Ok(values[segment.start..segment.end()]
        .chunks_exact(frame)
        .map(|c| c.iter().sum::<f64>() / frame as f64)
        .collect())
}
