use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::DistanceOptions;

/// Which copy of the signal motif distances are measured on.
///
/// SAX discretization always runs on the globally z-normalized series. The
/// radius test, the `2R` pruning rule and DBSCAN use the series selected
/// here, so `radius` is expressed in that space's units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceSpace {
    /// Globally z-normalized samples (dimensionless).
    Normalized,
    /// Samples in the units they were loaded in (e.g. G).
    #[default]
    Input,
}

/// Parameters of a discovery run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscoveryConfig {
    /// Sliding window length in samples.
    pub window_size: usize,
    /// Frames per SAX word.
    pub paa_size: usize,
    pub alphabet_size: usize,
    /// Motif radius `R`.
    pub radius: f64,
    pub min_pattern_words: usize,
    /// Sakoe-Chiba half-width in samples; `None` means exact DTW.
    pub dtw_band: Option<usize>,
    /// DBSCAN neighbourhood; defaults to `radius`.
    pub dbscan_eps: Option<f64>,
    pub dbscan_min_pts: usize,
    pub distance_space: DistanceSpace,
}

impl Default for DiscoveryConfig {
    fn default() -> Self {
        DiscoveryConfig {
            window_size: 20,
            paa_size: 2,
            alphabet_size: 5,
            radius: 0.1,
            min_pattern_words: 1,
            dtw_band: None,
            dbscan_eps: None,
            dbscan_min_pts: 3,
            distance_space: DistanceSpace::default(),
        }
    }
}

impl DiscoveryConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.window_size == 0 || self.paa_size == 0 {
            return bad("window_size and paa_size must be positive".into());
        }
        if !self.window_size.is_multiple_of(self.paa_size) {
            return bad(format!(
                "window_size {} is not a multiple of paa_size {}",
                self.window_size, self.paa_size
            ));
        }
        if !(2..=26).contains(&self.alphabet_size) {
            return Err(Error::AlphabetOutOfRange(self.alphabet_size));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return bad(format!("radius must be positive, got {}", self.radius));
        }
        if self.min_pattern_words == 0 {
            return bad("min_pattern_words must be at least 1".into());
        }
        if self.dtw_band == Some(0) {
            return bad("dtw_band must be at least 1".into());
        }
        let eps = self.eps();
        if !(eps.is_finite() && eps > 0.0) {
            return bad(format!("dbscan eps must be positive, got {eps}"));
        }
        if self.dbscan_min_pts == 0 {
            return bad("dbscan min_pts must be at least 1".into());
        }
        Ok(())
    }

    pub fn eps(&self) -> f64 {
        self.dbscan_eps.unwrap_or(self.radius)
    }

    pub fn distance_options(&self) -> DistanceOptions {
        DistanceOptions {
            band: self.dtw_band,
            normalize_by_path: true,
        }
    }
}
