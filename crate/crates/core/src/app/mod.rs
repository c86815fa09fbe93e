//! Ingestion, label overlay, synthetic trips and report output.

pub mod labels;
pub mod pipeline;
pub mod plot;
pub mod report;
pub mod source;
pub mod synth;

pub use labels::{load_labels, overlay_labels, EventKind, EventLabel};
pub use pipeline::{analyze, Analysis};
pub use report::{emit_report, load_report, render_plots, MotifEntry, MotifReport};
pub use source::{load_trip, LoadedTrip, Preset, TripSource};
pub use synth::{synth_trip, Maneuver, ManeuverKind, PlantedSegment, SynthSpec, SynthTrip};
