use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("series has zero variance; nothing to discretize")]
    ConstantSeries,
    #[error("series too short: {len} samples, need at least {needed}")]
    SeriesTooShort { len: usize, needed: usize },
    #[error("segment of length {length} cannot be split into {paa_size} equal frames")]
    IndivisibleSegment { length: usize, paa_size: usize },
    #[error("segment {start}+{length} exceeds series length {series_len}")]
    SegmentOutOfBounds {
        start: usize,
        length: usize,
        series_len: usize,
    },
    #[error("alphabet size {0} outside 2..=26")]
    AlphabetOutOfRange(usize),
    #[error("distance input is empty")]
    EmptyInput,
    #[error("band {band} cannot reach the corner of a {rows}x{cols} cost matrix")]
    BandInfeasible {
        band: usize,
        rows: usize,
        cols: usize,
    },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("degenerate MDL context: {0}")]
    DegenerateContext(String),
    #[error("invalid value: {0}")]
    InvalidValue(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot read {path}: {source}")]
    FileUnreadable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("too few samples: {found} valid rows, need {needed}")]
    TooFewSamples { found: usize, needed: usize },
    #[error("column {column} missing in row {row}")]
    ColumnMissing { column: usize, row: usize },
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("synthetic trip infeasible: {0}")]
    SpecInfeasible(String),
    #[error("cannot write {path}: {source}")]
    WriteFailure {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for errors caused by parameters rather than by input data.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidConfig(_)
                | Error::AlphabetOutOfRange(_)
                | Error::IndivisibleSegment { .. }
                | Error::BandInfeasible { .. }
                | Error::SpecInfeasible(_)
        )
    }
}
