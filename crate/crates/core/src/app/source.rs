//! Delimited text ingestion.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Delimiter {
    /// Runs of spaces or tabs.
    Whitespace,
    Char(char),
}

impl Delimiter {
    fn split<'a>(&self, line: &'a str) -> Vec<&'a str> {
        match self {
            Delimiter::Whitespace => line.split_whitespace().collect(),
            Delimiter::Char(c) => line.split(*c).map(str::trim).collect(),
        }
    }
}

impl FromStr for Delimiter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "" | " " | "space" | "whitespace" => Ok(Delimiter::Whitespace),
            "\\t" | "tab" => Ok(Delimiter::Char('\t')),
            _ => {
                let mut chars = s.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Ok(Delimiter::Char(c)),
                    _ => Err(Error::InvalidConfig(format!(
                        "delimiter must be one character, got {s:?}"
                    ))),
                }
            }
        }
    }
}

/// Column layouts of known datasets.
///
/// The UAH-DriveSet `RAW_ACCELEROMETERS.txt` files are space separated:
/// timestamp, system-active flag, raw x/y/z acceleration, Kalman-filtered
/// x/y/z acceleration (G), then roll/pitch/yaw. Columns are zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// Filtered longitudinal (z) acceleration.
    UahLon,
    /// Filtered lateral (y) acceleration.
    UahLat,
}

impl Preset {
    pub fn value_column(self) -> usize {
        match self {
            Preset::UahLon => 7,
            Preset::UahLat => 6,
        }
    }

    pub fn source(self, path: impl Into<PathBuf>) -> TripSource {
        TripSource {
            path: path.into(),
            delimiter: Delimiter::Whitespace,
            value_column: self.value_column(),
            timestamp_column: Some(0),
            sample_rate_hz: 10.0,
            min_rows: 1,
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uah-lon" => Ok(Preset::UahLon),
            "uah-lat" => Ok(Preset::UahLat),
            _ => Err(Error::InvalidConfig(format!("unknown preset {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TripSource {
    pub path: PathBuf,
    pub delimiter: Delimiter,
    /// Zero-based column holding the signal.
    pub value_column: usize,
    /// Rows whose timestamp does not parse are dropped as well.
    pub timestamp_column: Option<usize>,
    /// Declared rate; timestamps are never used to infer it.
    pub sample_rate_hz: f64,
    /// Fewer valid rows than this is an error.
    pub min_rows: usize,
}

impl TripSource {
    pub fn new(path: impl Into<PathBuf>, value_column: usize) -> Self {
        TripSource {
            path: path.into(),
            delimiter: Delimiter::Whitespace,
            value_column,
            timestamp_column: None,
            sample_rate_hz: 10.0,
            min_rows: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LoadedTrip {
    pub series: TimeSeries,
    /// Non-empty rows seen, retained or not.
    pub total_rows: usize,
    pub dropped_rows: usize,
}

/// Reads the value column of `src`, dropping rows that do not parse to a
/// finite number.
pub fn load_trip(src: &TripSource) -> Result<LoadedTrip> {
    let text = std::fs::read_to_string(&src.path).map_err(|source| Error::FileUnreadable {
        path: src.path.clone(),
        source,
    })?;
    let name = src
        .path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    parse_trip(&text, src).map(|mut t| {
        t.series = t.series.with_name(name);
        t
    })
}

/// [`load_trip`] on in-memory text.
pub fn parse_trip(text: &str, src: &TripSource) -> Result<LoadedTrip> {
    let parse = |field: Option<&&str>| {
        field
            .and_then(|f| f.parse::<f64>().ok())
            .filter(|v| v.is_finite())
    };
    let mut values = Vec::new();
    let mut total_rows = 0;
    let mut column_seen = false;
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        total_rows += 1;
        let fields = src.delimiter.split(line);
        column_seen |= fields.len() > src.value_column;
        let value = parse(fields.get(src.value_column));
        let stamp_ok = src
            .timestamp_column
            .is_none_or(|c| parse(fields.get(c)).is_some());
        if let (Some(v), true) = (value, stamp_ok) {
            values.push(v);
        }
    }
    if total_rows > 0 && !column_seen {
        return Err(Error::ColumnMissing {
            column: src.value_column,
            row: 1,
        });
    }
    let needed = src.min_rows.max(1);
    if values.len() < needed {
        return Err(Error::TooFewSamples {
            found: values.len(),
            needed,
        });
    }
    let dropped_rows = total_rows - values.len();
    Ok(LoadedTrip {
        series: TimeSeries::new(values, src.sample_rate_hz)?,
        total_rows,
        dropped_rows,
    })
}

/// Writes a two-column (`time_s value`) space-separated trip file.
pub fn write_trip(path: &Path, series: &TimeSeries) -> Result<()> {
    let mut out = String::with_capacity(series.len() * 24);
    for (i, v) in series.values().iter().enumerate() {
        out.push_str(&format!("{:.1} {v}\n", series.seconds(i)));
    }
    std::fs::write(path, out).map_err(|source| Error::WriteFailure {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn src(col: usize) -> TripSource {
        TripSource::new("mem", col)
    }

    #[test]
    fn dirty_row_dropped() {
        let text = "0 a 0.1\n1 b 0.2\n2 c x\n3 d 0.3\n";
        let t = parse_trip(text, &src(2)).unwrap();
        assert_eq!(t.series.values(), &[0.1, 0.2, 0.3]);
        assert_eq!(t.dropped_rows, 1);
        assert_eq!(t.total_rows, 4);
        assert_eq!(t.series.sample_rate_hz(), 10.0);
    }

    #[test]
    fn non_finite_and_header_dropped() {
        let text = "time value\n0 NaN\n1 inf\n2 0.5\n3 -0.25\n";
        let t = parse_trip(text, &src(1)).unwrap();
        assert_eq!(t.series.values(), &[0.5, -0.25]);
        assert_eq!(t.dropped_rows + t.series.len(), t.total_rows);
    }

    #[test]
    fn empty_file() {
        assert!(matches!(
            parse_trip("", &src(0)),
            Err(Error::TooFewSamples { found: 0, .. })
        ));
        assert!(matches!(
            parse_trip("\n\n", &src(0)),
            Err(Error::TooFewSamples { .. })
        ));
    }

    #[test]
    fn missing_column() {
        assert!(matches!(
            parse_trip("1 2\n3 4\n", &src(5)),
            Err(Error::ColumnMissing { column: 5, .. })
        ));
    }

    #[test]
    fn min_rows_enforced() {
        let s = TripSource {
            min_rows: 3,
            ..src(0)
        };
        assert!(matches!(
            parse_trip("1\n2\n", &s),
            Err(Error::TooFewSamples {
                found: 2,
                needed: 3
            })
        ));
    }

    #[test]
    fn csv_and_timestamps() {
        let s = TripSource {
            delimiter: Delimiter::Char(','),
            timestamp_column: Some(0),
            ..src(1)
        };
        let t = parse_trip("0.0, 1.5\nbad, 2.5\n0.2, 3.5\n", &s).unwrap();
        assert_eq!(t.series.values(), &[1.5, 3.5]);
    }

    #[test]
    fn uah_preset_layout() {
        let row = "0.10 1 0.01 0.02 0.03 0.004 0.005 -0.006 1.0 2.0 3.0";
        let lon = parse_trip(row, &Preset::UahLon.source("x")).unwrap();
        let lat = parse_trip(row, &Preset::UahLat.source("x")).unwrap();
        assert_eq!(lon.series.values(), &[-0.006]);
        assert_eq!(lat.series.values(), &[0.005]);
        assert_eq!("uah-lon".parse::<Preset>().unwrap(), Preset::UahLon);
        assert!("uah".parse::<Preset>().is_err());
    }

    #[test]
    fn delimiter_parsing() {
        assert_eq!(" ".parse::<Delimiter>().unwrap(), Delimiter::Whitespace);
        assert_eq!(",".parse::<Delimiter>().unwrap(), Delimiter::Char(','));
        assert_eq!("tab".parse::<Delimiter>().unwrap(), Delimiter::Char('\t'));
        assert!(";;".parse::<Delimiter>().is_err());
    }
}
