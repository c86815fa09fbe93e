//! Event labels recorded alongside a trip, used only to annotate reports.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::report::MotifReport;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Brake,
    Acceleration,
    Turn,
    Other,
}

impl EventKind {
    /// Accepts names and the numeric codes of UAH-DriveSet
    /// `EVENTS_INERTIAL.txt` (1 braking, 2 turning, 3 acceleration).
    pub fn parse(token: &str) -> EventKind {
        match token.trim().to_ascii_lowercase().as_str() {
            "1" | "brake" | "braking" => EventKind::Brake,
            "2" | "turn" | "turning" => EventKind::Turn,
            "3" | "acceleration" | "accel" | "accelerating" => EventKind::Acceleration,
            _ => EventKind::Other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EventLabel {
    /// Seconds from the start of the trip.
    pub time_s: f64,
    pub kind: EventKind,
}

/// Reads `time kind` rows (whitespace separated, extra columns ignored).
/// Rows whose time does not parse are skipped.
pub fn load_labels(path: &Path) -> Result<Vec<EventLabel>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::FileUnreadable {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_labels(&text))
}

pub fn parse_labels(text: &str) -> Vec<EventLabel> {
    text.lines()
        .filter_map(|line| {
            let mut fields = line.split_whitespace();
            let time_s: f64 = fields
                .next()?
                .parse()
                .ok()
                .filter(|t: &f64| t.is_finite())?;
            let kind = fields.next().map_or(EventKind::Other, EventKind::parse);
            Some(EventLabel { time_s, kind })
        })
        .collect()
}

/// Attaches each label to every pruned-motif member whose time span
/// `[start_s, end_s)` contains it. Labels that land in no member are listed
/// as unmatched; labels outside the trip are counted and dropped.
pub fn overlay_labels(mut report: MotifReport, labels: &[EventLabel]) -> MotifReport {
    let duration = report.trip.duration_s;
    let mut matched = vec![false; labels.len()];
    for entry in &mut report.pruned {
        for member in &mut entry.members {
            member.labels.clear();
            for (k, label) in labels.iter().enumerate() {
                if label.time_s >= member.span.start_s && label.time_s < member.span.end_s() {
                    member.labels.push(*label);
                    matched[k] = true;
                }
            }
        }
    }
    let in_trip = |l: &EventLabel| (0.0..=duration).contains(&l.time_s);
    report.unmatched_labels = labels
        .iter()
        .zip(&matched)
        .filter(|(l, m)| !**m && in_trip(l))
        .map(|(l, _)| *l)
        .collect();
    report.labels_out_of_range = labels.iter().filter(|l| !in_trip(l)).count();
    report
}
