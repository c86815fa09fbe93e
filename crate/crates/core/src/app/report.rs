//! Report model and on-disk output: `report.json`, `summary.tsv` and one
//! SVG plot per pruned motif.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::labels::EventLabel;
use super::plot;
use crate::config::DiscoveryConfig;
use crate::discovery::{Discovery, Motif};
use crate::error::{Error, Result};
use crate::selection::{ClusterAssignment, PrunedMotifSet};
use crate::series::{Segment, TimeSeries};

pub const REPORT_FILE: &str = "report.json";
pub const SUMMARY_FILE: &str = "summary.tsv";

/// A segment in samples and in seconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub length: usize,
    pub start_s: f64,
    pub duration_s: f64,
}

impl Span {
    pub fn new(segment: Segment, sample_rate_hz: f64) -> Self {
        Span {
            start: segment.start,
            length: segment.length,
            start_s: segment.start as f64 / sample_rate_hz,
            duration_s: segment.length as f64 / sample_rate_hz,
        }
    }

    pub fn segment(&self) -> Segment {
        Segment::new(self.start, self.length)
    }

    pub fn end_s(&self) -> f64 {
        self.start_s + self.duration_s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TripInfo {
    pub name: String,
    pub samples: usize,
    pub sample_rate_hz: f64,
    pub duration_s: f64,
    pub total_rows: Option<usize>,
    pub dropped_rows: Option<usize>,
    /// Statistics used for global normalization.
    pub mean: f64,
    pub std: f64,
    pub modified_words: usize,
    pub distinct_words: usize,
    pub repeated_patterns: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub candidates: usize,
    pub pruned: usize,
    pub clusters: usize,
    pub outliers: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MemberEntry {
    #[serde(flatten)]
    pub span: Span,
    pub distance: f64,
    pub labels: Vec<EventLabel>,
    /// Samples in input units, for plotting.
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifEntry {
    /// 1 = lowest MDL cost.
    pub rank: usize,
    /// Index into [`MotifReport::candidates`].
    pub candidate: usize,
    pub mdl_cost: f64,
    pub pattern: Vec<String>,
    pub center: Span,
    pub cluster: i64,
    pub members: Vec<MemberEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateEntry {
    pub index: usize,
    pub mdl_cost: f64,
    pub pattern_words: usize,
    pub members: usize,
    pub center: Span,
    pub cluster: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotifReport {
    pub trip: TripInfo,
    pub config: DiscoveryConfig,
    pub seed: Option<u64>,
    pub counts: Counts,
    pub pruned: Vec<MotifEntry>,
    pub candidates: Vec<CandidateEntry>,
    /// Candidate indices that DBSCAN left unclustered.
    pub outliers: Vec<usize>,
    pub unmatched_labels: Vec<EventLabel>,
    pub labels_out_of_range: usize,
}

impl MotifReport {
    pub fn build(
        input: &TimeSeries,
        cfg: &DiscoveryConfig,
        discovery: &Discovery,
        pruned: &PrunedMotifSet,
        clusters: &ClusterAssignment,
    ) -> MotifReport {
        let rate = input.sample_rate_hz();
        let span = |s: Segment| Span::new(s, rate);
        let candidates: Vec<CandidateEntry> = discovery
            .motifs
            .iter()
            .enumerate()
            .map(|(i, m)| CandidateEntry {
                index: i,
                mdl_cost: m.mdl_cost,
                pattern_words: m.pattern.len(),
                members: m.members.len(),
                center: span(m.center),
                cluster: clusters.labels[i],
            })
            .collect();
        let entry = |rank: usize, idx: usize, m: &Motif| MotifEntry {
            rank,
            candidate: idx,
            mdl_cost: m.mdl_cost,
            pattern: m.pattern.iter().map(|w| w.to_string()).collect(),
            center: span(m.center),
            cluster: clusters.labels[idx],
            members: m
                .members
                .iter()
                .map(|mm| MemberEntry {
                    span: span(mm.segment),
                    distance: mm.distance,
                    labels: Vec::new(),
                    values: input.slice(mm.segment).to_vec(),
                })
                .collect(),
        };
        MotifReport {
            trip: TripInfo {
                name: input.name().to_string(),
                samples: input.len(),
                sample_rate_hz: rate,
                duration_s: input.duration_s(),
                total_rows: None,
                dropped_rows: None,
                mean: discovery.mean,
                std: discovery.std,
                modified_words: discovery.context.total_words,
                distinct_words: discovery.context.distinct_words,
                repeated_patterns: discovery.pattern_count,
            },
            config: cfg.clone(),
            seed: None,
            counts: Counts {
                candidates: discovery.motifs.len(),
                pruned: pruned.len(),
                clusters: clusters.cluster_count,
                outliers: clusters.outlier_count(),
            },
            pruned: pruned
                .motifs
                .iter()
                .zip(&pruned.source_index)
                .enumerate()
                .map(|(r, (m, &idx))| entry(r + 1, idx, m))
                .collect(),
            candidates,
            outliers: clusters.outliers().collect(),
            unmatched_labels: Vec::new(),
            labels_out_of_range: 0,
        }
    }

    /// Tab-separated table: trip, candidate motifs, pruned motifs, DBSCAN
    /// clusters, DBSCAN outliers.
    pub fn summary_table(&self) -> String {
        format!(
            "trip\tmotifs\tmotifs_after_pruning\tdbscan_clusters\tdbscan_outliers\n{}\t{}\t{}\t{}\t{}\n",
            self.trip.name, self.counts.candidates, self.counts.pruned, self.counts.clusters, self.counts.outliers
        )
    }
}

fn write(path: PathBuf, contents: &[u8]) -> Result<PathBuf> {
    fs::write(&path, contents).map_err(|source| Error::WriteFailure {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

pub fn plot_file_name(rank: usize) -> String {
    format!("motif_{rank:03}.svg")
}

/// Writes the plots of every pruned motif, replacing old ones.
pub fn render_plots(report: &MotifReport, out_dir: &Path) -> Result<Vec<PathBuf>> {
    let stale = fs::read_dir(out_dir).map_err(|source| Error::WriteFailure {
        path: out_dir.to_path_buf(),
        source,
    })?;
    for entry in stale.flatten() {
        let name = entry.file_name().to_string_lossy().into_owned();
        if name.starts_with("motif_") && name.ends_with(".svg") {
            fs::remove_file(entry.path()).map_err(|source| Error::WriteFailure {
                path: entry.path(),
                source,
            })?;
        }
    }
    report
        .pruned
        .iter()
        .map(|e| {
            let svg = plot::motif_svg(e, &report.trip.name);
            write(out_dir.join(plot_file_name(e.rank)), svg.as_bytes())
        })
        .collect()
}

/// Writes `report.json`, `summary.tsv` and the motif plots into `out_dir`.
pub fn emit_report(report: &MotifReport, out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir).map_err(|source| Error::WriteFailure {
        path: out_dir.to_path_buf(),
        source,
    })?;
    let mut json = serde_json::to_vec_pretty(report).expect("report serializes");
    json.push(b'\n');
    let mut files = vec![
        write(out_dir.join(REPORT_FILE), &json)?,
        write(
            out_dir.join(SUMMARY_FILE),
            report.summary_table().as_bytes(),
        )?,
    ];
    files.extend(render_plots(report, out_dir)?);
    Ok(files)
}

pub fn load_report(dir: &Path) -> Result<MotifReport> {
    let path = dir.join(REPORT_FILE);
    let text = fs::read_to_string(&path).map_err(|source| Error::FileUnreadable {
        path: path.clone(),
        source,
    })?;
    serde_json::from_str(&text)
        .map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))
}
