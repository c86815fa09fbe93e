//! Post-processing of a ranked motif list: k-motif pruning with the `2R`
//! separation rule, and DBSCAN over motif centers.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::discovery::Motif;
use crate::error::Result;
use crate::metrics::{dtw_within, DistanceMatrix, DistanceOptions};
use crate::series::Segment;

/// Motifs whose centers are pairwise more than `2R` apart, best first.
#[derive(Debug, Clone, PartialEq)]
pub struct PrunedMotifSet {
    pub motifs: Vec<Motif>,
    /// Position of each accepted motif in the input list.
    pub source_index: Vec<usize>,
}

impl PrunedMotifSet {
    pub fn len(&self) -> usize {
        self.motifs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.motifs.is_empty()
    }
}

/// Center distance, or infinity once it is known to exceed `limit`.
fn center_distance(
    values: &[f64],
    a: Segment,
    b: Segment,
    opts: &DistanceOptions,
    limit: f64,
) -> Result<f64> {
    match dtw_within(
        &values[a.start..a.end()],
        &values[b.start..b.end()],
        opts,
        limit,
    ) {
        Ok(d) => Ok(d.unwrap_or(f64::INFINITY)),
        Err(crate::Error::BandInfeasible { .. }) => Ok(f64::INFINITY),
        Err(e) => Err(e),
    }
}

/// Greedy k-motif selection over a list already sorted by rank.
///
/// A motif is accepted iff its center is farther than `2 * radius` from the
/// center of every motif accepted before it.
pub fn prune_k_motifs(
    motifs: &[Motif],
    values: &[f64],
    radius: f64,
    opts: &DistanceOptions,
) -> Result<PrunedMotifSet> {
    let mut accepted: Vec<usize> = Vec::new();
    for (i, m) in motifs.iter().enumerate() {
        let mut keep = true;
        for &j in &accepted {
            if center_distance(values, m.center, motifs[j].center, opts, 2.0 * radius)?
                <= 2.0 * radius
            {
                keep = false;
                break;
            }
        }
        if keep {
            accepted.push(i);
        }
    }
    Ok(PrunedMotifSet {
        motifs: accepted.iter().map(|&i| motifs[i].clone()).collect(),
        source_index: accepted,
    })
}

pub const NOISE: i64 = -1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterAssignment {
    /// Cluster id per input point; [`NOISE`] marks outliers.
    pub labels: Vec<i64>,
    pub cluster_count: usize,
}

impl ClusterAssignment {
    pub fn outliers(&self) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == NOISE)
            .map(|(i, _)| i)
    }

    pub fn outlier_count(&self) -> usize {
        self.outliers().count()
    }
}

/// DBSCAN over a precomputed distance matrix.
///
/// A point is core when at least `min_pts` points (itself included) lie
/// within `eps`. Clusters are numbered in the order of their first core
/// point; a border point reachable from two clusters joins the one that is
/// expanded first.
pub fn dbscan(dm: &DistanceMatrix, eps: f64, min_pts: usize) -> ClusterAssignment {
    dbscan_by(dm.len(), min_pts, |i, j| Ok(dm.get(i, j) <= eps)).expect("infallible")
}

/// [`dbscan`] driven by a neighbourhood predicate `near(i, j)` (symmetric,
/// `near(i, i)` true).
///
/// Pairs are evaluated lazily: a core test stops at `min_pts` neighbours and
/// an expansion only looks at points that are still unlabeled. The labels are
/// the same as with a full neighbour scan.
pub fn dbscan_by<F>(n: usize, min_pts: usize, mut near: F) -> Result<ClusterAssignment>
where
    F: FnMut(usize, usize) -> Result<bool>,
{
    let mut core: Vec<Option<bool>> = vec![None; n];
    let mut is_core = |p: usize, near: &mut F| -> Result<bool> {
        if let Some(c) = core[p] {
            return Ok(c);
        }
        let mut count = 1;
        for q in (0..n).filter(|&q| q != p) {
            if count >= min_pts {
                break;
            }
            if near(p, q)? {
                count += 1;
            }
        }
        let c = count >= min_pts;
        core[p] = Some(c);
        Ok(c)
    };

    let mut labels: Vec<Option<i64>> = vec![None; n];
    let mut next = 0i64;
    for seed in 0..n {
        if labels[seed].is_some() || !is_core(seed, &mut near)? {
            continue;
        }
        labels[seed] = Some(next);
        let mut queue = VecDeque::from([seed]);
        while let Some(p) = queue.pop_front() {
            if !is_core(p, &mut near)? {
                continue;
            }
            for (q, label) in labels.iter_mut().enumerate() {
                if label.is_none() && near(p, q)? {
                    *label = Some(next);
                    queue.push_back(q);
                }
            }
        }
        next += 1;
    }
    Ok(ClusterAssignment {
        labels: labels.into_iter().map(|l| l.unwrap_or(NOISE)).collect(),
        cluster_count: next as usize,
    })
}

/// Center-to-center DTW matrix of `motifs`, filled in parallel.
pub fn center_distances(
    motifs: &[Motif],
    values: &[f64],
    opts: &DistanceOptions,
) -> Result<DistanceMatrix> {
    DistanceMatrix::build(motifs.len(), |i, j| {
        center_distance(
            values,
            motifs[i].center,
            motifs[j].center,
            opts,
            f64::INFINITY,
        )
    })
}

/// Groups motifs by the DTW distance between their centers.
pub fn dbscan_motifs(
    motifs: &[Motif],
    values: &[f64],
    eps: f64,
    min_pts: usize,
    opts: &DistanceOptions,
) -> Result<ClusterAssignment> {
    dbscan_by(motifs.len(), min_pts, |i, j| {
        Ok(center_distance(values, motifs[i].center, motifs[j].center, opts, eps)? <= eps)
    })
}
