//! Distance kernels.
//!
//! [`dtw`] is the motif distance: absolute pointwise cost, moves
//! match/insert/delete, total cost divided by the length of the optimal
//! warping path. The result reads as the mean deviation per aligned step,
//! so one radius serves members of different lengths.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceOptions {
    /// Sakoe-Chiba half-width: cell `(i, j)` is reachable iff `|i - j| <= band`.
    pub band: Option<usize>,
    pub normalize_by_path: bool,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            band: None,
            normalize_by_path: true,
        }
    }
}

/// Dynamic time warping distance between `a` and `b`.
pub fn dtw(a: &[f64], b: &[f64], opts: &DistanceOptions) -> Result<f64> {
    Ok(dtw_core(a, b, opts, f64::INFINITY)?.expect("no threshold"))
}

/// [`dtw`] that gives up as soon as the result is certain to exceed
/// `threshold`, returning `None`. Distances at or below the threshold are
/// returned exactly.
pub fn dtw_within(
    a: &[f64],
    b: &[f64],
    opts: &DistanceOptions,
    threshold: f64,
) -> Result<Option<f64>> {
    dtw_core(a, b, opts, threshold)
}

fn dtw_core(a: &[f64], b: &[f64], opts: &DistanceOptions, threshold: f64) -> Result<Option<f64>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (rows, cols) = (a.len(), b.len());
    if let Some(band) = opts.band {
        if band == 0 || rows.abs_diff(cols) > band {
            return Err(Error::BandInfeasible { band, rows, cols });
        }
    }
    let band = opts.band.unwrap_or(usize::MAX);
    // Path costs never decrease and a path has at most rows + cols - 1
    // steps, so a row minimum above this bound settles the outcome.
    let abandon_at = if opts.normalize_by_path {
        threshold * (rows + cols - 1) as f64
    } else {
        threshold
    };

    // Column 0 is a sentinel; prev[0] = 0 seeds the (0, 0) cell.
    let mut prev_cost = vec![f64::INFINITY; cols + 1];
    let mut prev_steps = vec![0u32; cols + 1];
    let mut cur_cost = vec![f64::INFINITY; cols + 1];
    let mut cur_steps = vec![0u32; cols + 1];
    prev_cost[0] = 0.0;
    for (i, &ai) in a.iter().enumerate() {
        let lo = i.saturating_sub(band);
        let hi = i.saturating_add(band).min(cols - 1);
        if opts.band.is_some() {
            cur_cost.fill(f64::INFINITY);
        }
        cur_cost[lo] = f64::INFINITY;
        let mut row_min = f64::INFINITY;
        for j in lo..=hi {
            // candidates: diagonal, up, left; equal cost prefers more steps
            let (mut c, mut s) = (prev_cost[j], prev_steps[j]);
            let (uc, us) = (prev_cost[j + 1], prev_steps[j + 1]);
            if uc < c || (uc == c && us > s) {
                c = uc;
                s = us;
            }
            let (lc, ls) = (cur_cost[j], cur_steps[j]);
            if lc < c || (lc == c && ls > s) {
                c = lc;
                s = ls;
            }
            let c = c + (ai - b[j]).abs();
            cur_cost[j + 1] = c;
            cur_steps[j + 1] = s + 1;
            row_min = row_min.min(c);
        }
        if row_min > abandon_at {
            return Ok(None);
        }
        std::mem::swap(&mut prev_cost, &mut cur_cost);
        std::mem::swap(&mut prev_steps, &mut cur_steps);
        prev_cost[0] = f64::INFINITY;
    }
    let (cost, steps) = (prev_cost[cols], prev_steps[cols]);
    let d = if opts.normalize_by_path {
        cost / steps as f64
    } else {
        cost
    };
    Ok((d <= threshold).then_some(d))
}

/// Euclidean distance divided by the sequence length.
pub fn euclid(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ss: f64 = a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum();
    Ok(ss.sqrt() / a.len() as f64)
}

/// Symmetric pairwise distances with a zero diagonal, stored condensed.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    upper: Vec<f64>,
}

impl DistanceMatrix {
    /// Fills the matrix in parallel; `dist(i, j)` is called once for each
    /// `i < j`.
    pub fn build<F>(n: usize, dist: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Result<f64> + Sync,
    {
        let rows: Vec<Vec<f64>> = (0..n)
            .into_par_iter()
            .map(|i| ((i + 1)..n).map(|j| dist(i, j)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(DistanceMatrix {
            n,
            upper: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn<F>(n: usize, dist: F) -> Self
    where
        F: Fn(usize, usize) -> f64 + Sync,
    {
        Self::build(n, |i, j| Ok(dist(i, j))).expect("infallible")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => 0.0,
            Less => self.upper[self.offset(i, j)],
            Greater => self.upper[self.offset(j, i)],
        }
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        // rows 0..i hold n-1, n-2, ... entries
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        (0..self.n).map(|j| self.get(i, j)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn exact() -> DistanceOptions {
        DistanceOptions::default()
    }

    /// Enumerates every monotone alignment path; returns (min cost, longest
    /// length among min-cost paths).
    fn brute_dtw(a: &[f64], b: &[f64]) -> (f64, usize) {
        fn walk(
            a: &[f64],
            b: &[f64],
            i: usize,
            j: usize,
            cost: f64,
            len: usize,
            best: &mut (f64, usize),
        ) {
            let cost = cost + (a[i] - b[j]).abs();
            let len = len + 1;
            if i == a.len() - 1 && j == b.len() - 1 {
                if cost < best.0 || (cost == best.0 && len > best.1) {
                    *best = (cost, len);
                }
                return;
            }
            if i + 1 < a.len() && j + 1 < b.len() {
                walk(a, b, i + 1, j + 1, cost, len, best);
            }
            if i + 1 < a.len() {
                walk(a, b, i + 1, j, cost, len, best);
            }
            if j + 1 < b.len() {
                walk(a, b, i, j + 1, cost, len, best);
            }
        }
        let mut best = (f64::INFINITY, 0);
        walk(a, b, 0, 0, 0.0, 0, &mut best);
        best
    }

    #[test]
    fn dtw_examples() {
        let x = [0.3, -0.1, 0.7];
        assert_eq!(dtw(&x, &x, &exact()).unwrap(), 0.0);
        assert_abs_diff_eq!(
            dtw(&[0.0; 3], &[1.0; 3], &exact()).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert_eq!(
            dtw(&[0.0, 1.0, 0.0], &[0.0, 1.0, 1.0, 0.0], &exact()).unwrap(),
            0.0
        );
        let raw = DistanceOptions {
            normalize_by_path: false,
            ..exact()
        };
        assert_abs_diff_eq!(
            dtw(&[0.0; 3], &[1.0; 3], &raw).unwrap(),
            3.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn dtw_errors() {
        assert!(matches!(dtw(&[], &[1.0], &exact()), Err(Error::EmptyInput)));
        let banded = DistanceOptions {
            band: Some(1),
            ..exact()
        };
        assert!(matches!(
            dtw(&[0.0; 3], &[0.0; 6], &banded),
            Err(Error::BandInfeasible {
                band: 1,
                rows: 3,
                cols: 6
            })
        ));
        assert!(dtw(&[0.0; 3], &[0.0; 4], &banded).is_ok());
    }

    #[test]
    fn dtw_matches_brute_force_fixture() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let la = rng.random_range(1..=6);
            let lb = rng.random_range(1..=6);
            let a: Vec<f64> = (0..la).map(|_| rng.random_range(-1.0..1.0)).collect();
            let b: Vec<f64> = (0..lb).map(|_| rng.random_range(-1.0..1.0)).collect();
            let (cost, len) = brute_dtw(&a, &b);
            let raw = DistanceOptions {
                normalize_by_path: false,
                ..exact()
            };
            assert_eq!(dtw(&a, &b, &raw).unwrap(), cost);
            assert_eq!(dtw(&a, &b, &exact()).unwrap(), cost / len as f64);
        }
    }

    #[test]
    fn euclid_examples() {
        assert_eq!(euclid(&[1.0, 2.0], &[1.0, 2.0]).unwrap(), 0.0);
        assert_eq!(euclid(&[0.0, 0.0], &[3.0, 4.0]).unwrap(), 2.5);
        assert_eq!(euclid(&[0.25], &[-1.0]).unwrap(), 1.25);
        assert!(matches!(
            euclid(&[0.0], &[0.0, 1.0]),
            Err(Error::LengthMismatch(1, 2))
        ));
    }

    #[test]
    fn condensed_matrix_indexing() {
        let m = DistanceMatrix::from_fn(5, |i, j| (10 * i + j) as f64);
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j {
                    0.0
                } else {
                    (10 * i.min(j) + i.max(j)) as f64
                };
                assert_eq!(m.get(i, j), want);
            }
        }
        assert_eq!(m.row_sum(0), 1.0 + 2.0 + 3.0 + 4.0);
    }

    proptest! {
        #[test]
        fn dtw_properties(
            a in prop::collection::vec(-3.0f64..3.0, 1..30),
            b in prop::collection::vec(-3.0f64..3.0, 1..30),
        ) {
            let d = dtw(&a, &b, &exact()).unwrap();
            prop_assert!(d >= 0.0);
            prop_assert_eq!(d, dtw(&b, &a, &exact()).unwrap());
            prop_assert_eq!(dtw(&a, &a, &exact()).unwrap(), 0.0);
            let wide = DistanceOptions { band: Some(a.len().max(b.len())), ..exact() };
            prop_assert_eq!(d, dtw(&a, &b, &wide).unwrap());
        }

        #[test]
        fn early_abandon_is_exact(
            a in prop::collection::vec(-1.0f64..1.0, 1..25),
            b in prop::collection::vec(-1.0f64..1.0, 1..25),
            t in 0.0f64..1.0,
            band in prop::option::of(25usize..30),
        ) {
            let opts = DistanceOptions { band, ..exact() };
            let d = dtw(&a, &b, &opts).unwrap();
            let got = dtw_within(&a, &b, &opts, t).unwrap();
            prop_assert_eq!(got, (d <= t).then_some(d));
        }

        #[test]
        fn dtw_below_diagonal_cost(pairs in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..30)) {
            let (a, b): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
            let raw = DistanceOptions { normalize_by_path: false, ..exact() };
            let diag: f64 = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).sum();
            prop_assert!(dtw(&a, &b, &raw).unwrap() <= diag + 1e-12);
        }
    }
}
