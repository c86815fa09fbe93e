//! Plants brake dips of varying length in a noisy baseline and lists the
//! discovered motifs that recover them.
//!
//! cargo run --release --example discover_planted [seed]

use emd_motifs::app::{synth_trip, Maneuver, ManeuverKind, SynthSpec};
use emd_motifs::{discover, DiscoveryConfig};

fn main() -> emd_motifs::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let spec = SynthSpec {
        length: 3000,
        sample_rate_hz: 10.0,
        noise_sigma: 0.02,
        min_gap: 20,
        maneuvers: vec![Maneuver {
            kind: ManeuverKind::Brake,
            amplitude: -0.3,
            duration_min: 18,
            duration_max: 24,
            count: 5,
        }],
    };
    let trip = synth_trip(&spec, seed)?;
    let cfg = DiscoveryConfig::default();
    let d = discover(&trip.series, &cfg)?;
    println!(
        "{} modified words ({} distinct), {} repeated patterns, {} motifs",
        d.context.total_words,
        d.context.distinct_words,
        d.pattern_count,
        d.motifs.len()
    );

    let hits = |m: &emd_motifs::Motif| {
        trip.truth
            .iter()
            .filter(|p| {
                m.segments()
                    .any(|s| 2 * s.intersection_len(&p.segment) >= p.segment.length)
            })
            .count()
    };
    println!("top motifs by MDL cost:");
    for (rank, m) in d.motifs.iter().enumerate().take(5) {
        println!(
            "  #{:<4} {:>8.2} bits  {:>3} members  covers {}",
            rank + 1,
            m.mdl_cost,
            m.members.len(),
            hits(m)
        );
    }
    if let Some((rank, m)) = d
        .motifs
        .iter()
        .enumerate()
        .max_by_key(|(i, m)| (hits(m), std::cmp::Reverse(*i)))
    {
        let pattern: Vec<String> = m.pattern.iter().map(|w| w.to_string()).collect();
        println!(
            "best recovery: #{} [{}] covers {}/{}",
            rank + 1,
            pattern.join(" "),
            hits(m),
            trip.truth.len()
        );
        for member in &m.members {
            println!(
                "  {:>5}+{:<3} d={:.4}",
                member.segment.start, member.segment.length, member.distance
            );
        }
    }
    Ok(())
}
