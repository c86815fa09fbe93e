#![allow(dead_code)]

use emd_motifs::app::{Maneuver, ManeuverKind, PlantedSegment, SynthSpec};
use emd_motifs::discovery::{rank_order, Discovery, Motif};
use emd_motifs::selection::PrunedMotifSet;
use emd_motifs::{dtw, overlap, DiscoveryConfig};

pub fn dip_spec(length: usize, count: usize, sigma: f64, durations: (usize, usize)) -> SynthSpec {
    SynthSpec {
        length,
        sample_rate_hz: 10.0,
        noise_sigma: sigma,
        min_gap: 20,
        maneuvers: vec![Maneuver {
            kind: ManeuverKind::Brake,
            amplitude: -0.3,
            duration_min: durations.0,
            duration_max: durations.1,
            count,
        }],
    }
}

/// Planted segments overlapped by some member on at least half their samples.
pub fn covered(motif: &Motif, truth: &[PlantedSegment]) -> usize {
    truth
        .iter()
        .filter(|p| {
            motif
                .segments()
                .any(|s| 2 * s.intersection_len(&p.segment) >= p.segment.length)
        })
        .count()
}

/// Behavior, distance and non-overlap constraints of every motif, plus the
/// output ordering.
pub fn check_motifs(d: &Discovery, cfg: &DiscoveryConfig) -> Result<(), String> {
    let values = d.distance_series.values();
    let opts = cfg.distance_options();
    for (k, m) in d.motifs.iter().enumerate() {
        if m.members.len() < 2 {
            return Err(format!("motif {k} has {} members", m.members.len()));
        }
        if !m.segments().any(|s| s == m.center) {
            return Err(format!("motif {k}: center is not a member"));
        }
        let segs: Vec<_> = m.segments().collect();
        for (i, a) in segs.iter().enumerate() {
            for b in &segs[i + 1..] {
                if overlap(*a, *b) {
                    return Err(format!("motif {k}: members {a:?} and {b:?} overlap"));
                }
            }
        }
        let center = &values[m.center.start..m.center.end()];
        for mm in &m.members {
            let d = dtw(&values[mm.segment.start..mm.segment.end()], center, &opts)
                .map_err(|e| e.to_string())?;
            if d > cfg.radius {
                return Err(format!("motif {k}: member {:?} at {d} > R", mm.segment));
            }
            if (d - mm.distance).abs() > 1e-12 {
                return Err(format!("motif {k}: stored distance {} != {d}", mm.distance));
            }
        }
        // every member spells the generating pattern
        for s in &segs {
            let spelled: Vec<_> = d
                .words
                .iter()
                .filter(|w| w.start >= s.start && w.end() <= s.end())
                .map(|w| &w.word)
                .collect();
            if spelled.len() != m.pattern.len()
                || spelled.iter().zip(&m.pattern).any(|(a, b)| *a != b)
            {
                return Err(format!(
                    "motif {k}: member {s:?} does not spell its pattern"
                ));
            }
        }
    }
    for w in d.motifs.windows(2) {
        if rank_order(&w[0], &w[1]).is_gt() {
            return Err("motifs out of rank order".into());
        }
    }
    Ok(())
}

pub fn check_pruned(
    p: &PrunedMotifSet,
    values: &[f64],
    cfg: &DiscoveryConfig,
) -> Result<(), String> {
    let opts = cfg.distance_options();
    for (i, a) in p.motifs.iter().enumerate() {
        for b in &p.motifs[i + 1..] {
            let d = dtw(
                &values[a.center.start..a.center.end()],
                &values[b.center.start..b.center.end()],
                &opts,
            )
            .map_err(|e| e.to_string())?;
            if d <= 2.0 * cfg.radius {
                return Err(format!(
                    "pruned centers {:?} and {:?} only {d} apart",
                    a.center, b.center
                ));
            }
        }
    }
    Ok(())
}
