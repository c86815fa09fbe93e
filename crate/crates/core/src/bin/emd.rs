use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use emd_motifs::app::source::{write_trip, Delimiter};
use emd_motifs::app::{
    analyze, emit_report, load_labels, load_report, load_trip, render_plots, synth_trip,
};
use emd_motifs::app::{Preset, SynthSpec, TripSource};
use emd_motifs::{DiscoveryConfig, DistanceSpace, Error};

#[derive(Parser)]
#[command(
    name = "emd",
    version,
    about = "Variable-length motif discovery for telematics signals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discover, prune and cluster motifs in one trip file.
    Discover {
        input: PathBuf,
        /// Zero-based value column (overrides the preset's).
        #[arg(long)]
        column: Option<usize>,
        #[arg(long)]
        preset: Option<Preset>,
        #[arg(long, default_value = " ")]
        delimiter: Delimiter,
        #[arg(long)]
        rate: Option<f64>,
        #[arg(long, default_value_t = 20)]
        window: usize,
        #[arg(long, default_value_t = 2)]
        paa: usize,
        #[arg(long, default_value_t = 5)]
        alphabet: usize,
        #[arg(long, default_value_t = 0.1)]
        radius: f64,
        #[arg(long, value_enum, default_value = "input")]
        distance_space: Space,
        #[arg(long)]
        band: Option<usize>,
        #[arg(long, default_value_t = 1)]
        min_words: usize,
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long, default_value = "emd-out")]
        out: PathBuf,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, default_value_t = 3)]
        min_pts: usize,
        /// Recorded in the report.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Generate a synthetic trip with planted maneuvers.
    Synth {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-render plots from a saved report directory.
    Report {
        #[arg(long = "in")]
        dir: PathBuf,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Space {
    Input,
    Normalized,
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Discover {
            input,
            column,
            preset,
            delimiter,
            rate,
            window,
            paa,
            alphabet,
            radius,
            distance_space,
            band,
            min_words,
            labels,
            out,
            eps,
            min_pts,
            seed,
        } => {
            let cfg = DiscoveryConfig {
                window_size: window,
                paa_size: paa,
                alphabet_size: alphabet,
                radius,
                min_pattern_words: min_words,
                dtw_band: band,
                dbscan_eps: eps,
                dbscan_min_pts: min_pts,
                distance_space: match distance_space {
                    Space::Input => DistanceSpace::Input,
                    Space::Normalized => DistanceSpace::Normalized,
                },
            };
            cfg.validate()?;
            let mut src = match (preset, column) {
                (Some(p), _) => p.source(&input),
                (None, Some(c)) => TripSource {
                    delimiter,
                    ..TripSource::new(&input, c)
                },
                (None, None) => {
                    return Err(Error::InvalidConfig(
                        "either --column or --preset is required".into(),
                    ))
                }
            };
            if let Some(c) = column {
                src.value_column = c;
            }
            if let Some(r) = rate {
                src.sample_rate_hz = r;
            }
            src.min_rows = window;
            let trip = load_trip(&src)?;
            if trip.dropped_rows > 0 {
                eprintln!(
                    "warning: dropped {} of {} rows",
                    trip.dropped_rows, trip.total_rows
                );
            }
            let labels = match labels {
                Some(path) => load_labels(&path)?,
                None => Vec::new(),
            };
            let analysis = match analyze(&trip.series, &cfg, &labels) {
                Err(Error::ConstantSeries) => {
                    eprintln!("no motifs: the signal is constant");
                    return Ok(());
                }
                other => other?,
            };
            let mut report = analysis.report;
            report.seed = seed;
            report.trip.total_rows = Some(trip.total_rows);
            report.trip.dropped_rows = Some(trip.dropped_rows);
            emit_report(&report, &out)?;
            print!("{}", report.summary_table());
            Ok(())
        }
        Command::Synth { spec, seed, out } => {
            let text = std::fs::read_to_string(&spec).map_err(|source| Error::FileUnreadable {
                path: spec.clone(),
                source,
            })?;
            let spec: SynthSpec =
                serde_json::from_str(&text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
            let trip = synth_trip(&spec, seed)?;
            std::fs::create_dir_all(&out).map_err(|source| Error::WriteFailure {
                path: out.clone(),
                source,
            })?;
            write_trip(&out.join("trip.txt"), &trip.series)?;
            let truth = serde_json::to_string_pretty(&trip.truth).expect("truth serializes");
            let truth_path = out.join("truth.json");
            std::fs::write(&truth_path, truth + "\n").map_err(|source| Error::WriteFailure {
                path: truth_path,
                source,
            })?;
            println!(
                "wrote {} samples, {} planted maneuvers",
                trip.series.len(),
                trip.truth.len()
            );
            Ok(())
        }
        Command::Report { dir } => {
            let report = load_report(&dir)?;
            let files = render_plots(&report, &dir)?;
            println!("rendered {} plots", files.len());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config_error() { 3 } else { 2 })
        }
    }
}
