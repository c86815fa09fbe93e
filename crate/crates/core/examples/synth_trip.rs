//! Writes a synthetic trip and its ground truth, ready for `emd discover`.
//!
//! cargo run --example synth_trip -- <out-dir> [seed]

use std::path::PathBuf;

use emd_motifs::app::source::write_trip;
use emd_motifs::app::{synth_trip, Maneuver, ManeuverKind, SynthSpec};

fn main() -> emd_motifs::Result<()> {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "synth-trip".into()));
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let spec = SynthSpec {
        length: 6000,
        sample_rate_hz: 10.0,
        noise_sigma: 0.02,
        min_gap: 30,
        maneuvers: vec![
            Maneuver {
                kind: ManeuverKind::Brake,
                amplitude: 0.3,
                duration_min: 18,
                duration_max: 24,
                count: 6,
            },
            Maneuver {
                kind: ManeuverKind::LaneChange,
                amplitude: 0.2,
                duration_min: 30,
                duration_max: 40,
                count: 3,
            },
        ],
    };
    let trip = synth_trip(&spec, seed)?;
    std::fs::create_dir_all(&out).expect("create output directory");
    write_trip(&out.join("trip.txt"), &trip.series)?;
    let labels: String = trip
        .truth
        .iter()
        .map(|p| {
            let kind = match p.kind {
                ManeuverKind::Brake => "brake",
                _ => "turn",
            };
            format!(
                "{:.1} {kind}\n",
                trip.series.seconds(p.segment.start + p.segment.length / 2)
            )
        })
        .collect();
    std::fs::write(out.join("labels.txt"), labels).expect("write labels");
    for p in &trip.truth {
        println!("{:?} at {}..{}", p.kind, p.segment.start, p.segment.end());
    }
    println!("wrote {}", out.display());
    Ok(())
}
