//! End-to-end analysis of one trip.

use super::labels::{overlay_labels, EventLabel};
use super::report::MotifReport;
use crate::config::DiscoveryConfig;
use crate::discovery::{discover, Discovery};
use crate::error::Result;
use crate::selection::{dbscan_motifs, prune_k_motifs, ClusterAssignment, PrunedMotifSet};
use crate::series::TimeSeries;

#[derive(Debug, Clone)]
pub struct Analysis {
    pub discovery: Discovery,
    pub pruned: PrunedMotifSet,
    pub clusters: ClusterAssignment,
    pub report: MotifReport,
}

/// Discovery, k-motif pruning, DBSCAN over all candidate centers, and the
/// report with `labels` overlaid.
pub fn analyze(ts: &TimeSeries, cfg: &DiscoveryConfig, labels: &[EventLabel]) -> Result<Analysis> {
    let discovery = discover(ts, cfg)?;
    let values = discovery.distance_series.values();
    let opts = cfg.distance_options();
    let pruned = prune_k_motifs(&discovery.motifs, values, cfg.radius, &opts)?;
    let clusters = dbscan_motifs(
        &discovery.motifs,
        values,
        cfg.eps(),
        cfg.dbscan_min_pts,
        &opts,
    )?;
    let report = MotifReport::build(ts, cfg, &discovery, &pruned, &clusters);
    let report = overlay_labels(report, labels);
    Ok(Analysis {
        discovery,
        pruned,
        clusters,
        report,
    })
}
