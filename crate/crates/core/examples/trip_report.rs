//! Full analysis of one trip file with event labels, written as a report
//! directory (JSON, summary table, one SVG per pruned motif).
//!
//! cargo run --release --example trip_report -- <trip.txt> [labels.txt] [out-dir]
//!
//! Without arguments a synthetic trip is analyzed. A UAH-DriveSet
//! `RAW_ACCELEROMETERS.txt` is read with the longitudinal preset.

use std::path::PathBuf;

use emd_motifs::app::{
    analyze, emit_report, load_labels, load_trip, synth_trip, Maneuver, ManeuverKind, Preset,
    SynthSpec, TripSource,
};
use emd_motifs::DiscoveryConfig;

fn main() -> emd_motifs::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (series, labels) = match args.first() {
        Some(path) => {
            let path = PathBuf::from(path);
            let src = if path
                .file_name()
                .is_some_and(|n| n == "RAW_ACCELEROMETERS.txt")
            {
                Preset::UahLon.source(&path)
            } else {
                TripSource::new(&path, 1)
            };
            let loaded = load_trip(&src)?;
            let labels = match args.get(1) {
                Some(l) => load_labels(l.as_ref())?,
                None => Vec::new(),
            };
            (loaded.series, labels)
        }
        None => {
            let spec = SynthSpec {
                length: 2500,
                sample_rate_hz: 10.0,
                noise_sigma: 0.02,
                min_gap: 20,
                maneuvers: vec![Maneuver {
                    kind: ManeuverKind::Brake,
                    amplitude: 0.3,
                    duration_min: 18,
                    duration_max: 24,
                    count: 4,
                }],
            };
            let trip = synth_trip(&spec, 5)?;
            let labels = trip
                .truth
                .iter()
                .map(|p| emd_motifs::app::EventLabel {
                    time_s: trip.series.seconds(p.segment.start + 2),
                    kind: emd_motifs::app::EventKind::Brake,
                })
                .collect();
            (trip.series, labels)
        }
    };
    let out = PathBuf::from(args.get(2).map(String::as_str).unwrap_or("trip-report"));

    let analysis = analyze(&series, &DiscoveryConfig::default(), &labels)?;
    let files = emit_report(&analysis.report, &out)?;
    print!("{}", analysis.report.summary_table());
    for entry in &analysis.report.pruned {
        let labelled = entry
            .members
            .iter()
            .filter(|m| !m.labels.is_empty())
            .count();
        println!(
            "motif {} [{}]: {} members, {} carry labels",
            entry.rank,
            entry.pattern.join(" "),
            entry.members.len(),
            labelled
        );
    }
    println!(
        "{} unmatched labels; wrote {} files to {}",
        analysis.report.unmatched_labels.len(),
        files.len(),
        out.display()
    );
    Ok(())
}
