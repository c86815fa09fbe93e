//! Reduces the ranked motif list to well-separated k-motifs and groups all
//! motif centers with DBSCAN.
//!
//! cargo run --release --example prune_and_cluster

use emd_motifs::app::{synth_trip, Maneuver, ManeuverKind, SynthSpec};
use emd_motifs::{dbscan_motifs, discover, prune_k_motifs, DiscoveryConfig};

fn main() -> emd_motifs::Result<()> {
    let maneuver = |kind, amplitude| Maneuver {
        kind,
        amplitude,
        duration_min: 20,
        duration_max: 30,
        count: 4,
    };
    let spec = SynthSpec {
        length: 3000,
        sample_rate_hz: 10.0,
        noise_sigma: 0.01,
        min_gap: 40,
        maneuvers: vec![
            maneuver(ManeuverKind::Brake, 0.4),
            maneuver(ManeuverKind::Acceleration, 0.3),
            maneuver(ManeuverKind::BrakeAccelerate, 0.4),
        ],
    };
    let trip = synth_trip(&spec, 12)?;
    let cfg = DiscoveryConfig::default();
    let d = discover(&trip.series, &cfg)?;
    let values = d.distance_series.values();
    let opts = cfg.distance_options();

    let pruned = prune_k_motifs(&d.motifs, values, cfg.radius, &opts)?;
    println!(
        "{} candidates -> {} after pruning",
        d.motifs.len(),
        pruned.len()
    );
    for (m, idx) in pruned.motifs.iter().zip(&pruned.source_index) {
        println!(
            "  candidate #{:<5} center {:>5}+{:<3} {:>3} members",
            idx + 1,
            m.center.start,
            m.center.length,
            m.members.len()
        );
    }

    let clusters = dbscan_motifs(&d.motifs, values, cfg.eps(), cfg.dbscan_min_pts, &opts)?;
    println!(
        "DBSCAN: {} clusters, {} outliers",
        clusters.cluster_count,
        clusters.outlier_count()
    );
    let mut sizes = vec![0usize; clusters.cluster_count];
    for &l in clusters.labels.iter().filter(|l| **l >= 0) {
        sizes[l as usize] += 1;
    }
    println!("cluster sizes {sizes:?}");
    Ok(())
}
