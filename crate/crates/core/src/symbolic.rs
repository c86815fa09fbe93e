//! SAX discretization with fixed Gaussian breakpoints, and the run-merging
//! step that turns per-window words into variable-span modified words.
//!
//! Breakpoints are the standard-normal quantiles applied to the globally
//! normalized series. They are never recomputed per window: two windows with
//! the same shape but different amplitude get different words.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::config::DiscoveryConfig;
use crate::error::{Error, Result};
use crate::series::{paa, Segment};

/// A SAX word; each symbol is an index into the alphabet (`0` = `'a'`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct SaxWord(Vec<u8>);

impl SaxWord {
    pub fn new(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < 26));
        SaxWord(symbols)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SaxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", (b'a' + s) as char)?;
        }
        Ok(())
    }
}

impl From<SaxWord> for String {
    fn from(w: SaxWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for SaxWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl std::str::FromStr for SaxWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.bytes()
            .map(|b| match b {
                b'a'..=b'z' => Ok(b - b'a'),
                _ => Err(Error::MalformedInput(format!("bad SAX word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SaxWord)
    }
}

/// A SAX word standing for `run_count` consecutive windows that all
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModifiedWord {
    pub word: SaxWord,
    /// First sample of the first merged window.
    pub start: usize,
    /// Samples covered: `window_size + run_count - 1`.
    pub span: usize,
    pub run_count: usize,
}

impl ModifiedWord {
    pub fn segment(&self) -> Segment {
        Segment::new(self.start, self.span)
    }

    pub fn end(&self) -> usize {
        self.start + self.span
    }
}

/// Standard-normal quantiles at `k / alphabet_size` for `k = 1..alphabet_size`.
pub fn breakpoints(alphabet_size: usize) -> Result<Vec<f64>> {
    if !(2..=26).contains(&alphabet_size) {
        return Err(Error::AlphabetOutOfRange(alphabet_size));
    }
    let normal = Normal::standard();
    Ok((1..alphabet_size)
        .map(|k| normal.inverse_cdf(k as f64 / alphabet_size as f64))
        .collect())
}

/// Index of the breakpoint interval holding `value`; a value equal to a
/// breakpoint belongs to the interval above it.
pub fn symbol_for(value: f64, breakpoints: &[f64]) -> u8 {
    breakpoints.partition_point(|b| *b <= value) as u8
}

/// SAX word of one window of `values`.
pub fn sax_word(
    values: &[f64],
    window: Segment,
    paa_size: usize,
    breakpoints: &[f64],
) -> Result<SaxWord> {
    let frames = paa(values, window, paa_size)?;
    Ok(SaxWord(
        frames.iter().map(|&m| symbol_for(m, breakpoints)).collect(),
    ))
}

/// One SAX word per sliding window (step one sample).
pub fn sax_sequence(values: &[f64], cfg: &DiscoveryConfig) -> Result<Vec<SaxWord>> {
    cfg.validate()?;
    let n = cfg.window_size;
    if values.len() < n {
        return Err(Error::SeriesTooShort {
            len: values.len(),
            needed: n,
        });
    }
    let cuts = breakpoints(cfg.alphabet_size)?;
    (0..=values.len() - n)
        .into_par_iter()
        .map(|start| sax_word(values, Segment::new(start, n), cfg.paa_size, &cuts))
        .collect()
}

/// Collapses maximal runs of equal consecutive words.
pub fn merge_runs(words: &[SaxWord], window_size: usize) -> Vec<ModifiedWord> {
    let mut out: Vec<ModifiedWord> = Vec::new();
    for (i, w) in words.iter().enumerate() {
        match out.last_mut() {
            Some(last) if last.word == *w => {
                last.run_count += 1;
                last.span += 1;
            }
            _ => out.push(ModifiedWord {
                word: w.clone(),
                start: i,
                span: window_size,
                run_count: 1,
            }),
        }
    }
    out
}

/// Re-expands modified words into the per-window sequence.
pub fn expand(words: &[ModifiedWord]) -> Vec<SaxWord> {
    words
        .iter()
        .flat_map(|m| std::iter::repeat_n(m.word.clone(), m.run_count))
        .collect()
}

/// Modified SAX representation of an already normalized series.
pub fn modified_sax(values: &[f64], cfg: &DiscoveryConfig) -> Result<Vec<ModifiedWord>> {
    let raw = sax_sequence(values, cfg)?;
    Ok(merge_runs(&raw, cfg.window_size))
}
