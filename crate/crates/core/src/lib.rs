//! Variable-length motif discovery for 1-dimensional telematics signals.
//!
//! The pipeline follows the Extended Motif Discovery (EMD) scheme with fixed,
//! amplitude-preserving SAX breakpoints:
//!
//! 1. the trip is z-normalized once, globally ([`series::zscore_global`]);
//! 2. sliding windows are discretized into SAX words and consecutive equal
//!    words are merged into variable-span words ([`symbolic::modified_sax`]);
//! 3. repeated word patterns are enumerated, filtered by a radius under
//!    length-normalized DTW, cleared of trivial matches and ranked by MDL
//!    cost ([`discovery::discover`]);
//! 4. the ranked list is pruned into k-motifs with the `2R` separation rule
//!    and the motif centers are grouped with DBSCAN ([`selection`]).
//!
//! The [`app`] module holds file ingestion, label overlay, synthetic trips
//! and report output. See the crate `examples/` directory for runnable
//! walkthroughs of each stage.

pub mod app;
pub mod config;
pub mod discovery;
pub mod error;
pub mod metrics;
pub mod selection;
pub mod series;
pub mod symbolic;

pub use config::{DiscoveryConfig, DistanceSpace};
pub use discovery::{discover, Discovery, Motif};
pub use error::{Error, Result};
pub use metrics::{dtw, euclid, DistanceOptions};
pub use selection::{dbscan_motifs, prune_k_motifs, ClusterAssignment, PrunedMotifSet};
pub use series::{overlap, paa, zscore_global, Segment, TimeSeries};
pub use symbolic::{breakpoints, modified_sax, sax_word, ModifiedWord, SaxWord};
