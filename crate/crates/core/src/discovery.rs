//! The motif discovery engine.
//!
//! Repeated patterns of modified SAX words are enumerated with increasing
//! length until no pattern repeats. Each pattern's occurrences are compared
//! under normalized DTW; the medoid becomes the center, occurrences outside
//! the radius are dropped and overlapping members are resolved in favour of
//! the one closer to the center. Surviving motifs are ranked by MDL cost.

use std::cmp::Ordering;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{DiscoveryConfig, DistanceSpace};
use crate::error::{Error, Result};
use crate::metrics::{dtw, DistanceMatrix, DistanceOptions};
use crate::series::{zscore_global, Segment, TimeSeries};
use crate::symbolic::{modified_sax, ModifiedWord, SaxWord};

/// A word pattern that occurs at least twice in the modified word sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidatePattern {
    pub words: Vec<SaxWord>,
    /// Index of the first word of each occurrence.
    pub positions: Vec<usize>,
    /// Sample span of each occurrence, parallel to `positions`.
    pub occurrences: Vec<Segment>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Member {
    pub segment: Segment,
    /// Distance to the motif center.
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Motif {
    pub pattern: Vec<SaxWord>,
    pub center: Segment,
    /// Sorted by start; includes the center.
    pub members: Vec<Member>,
    /// Description length in bits. Zero until the motif is ranked.
    pub mdl_cost: f64,
}

impl Motif {
    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.members.iter().map(|m| m.segment)
    }

    pub fn member_count(&self) -> usize {
        self.members.len()
    }
}

/// Sequence statistics used by [`mdl_cost`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdlContext {
    /// Number of modified words in the trip.
    pub total_words: usize,
    /// Number of distinct word values.
    pub distinct_words: usize,
}

impl MdlContext {
    pub fn from_words(words: &[ModifiedWord]) -> Self {
        let mut distinct: Vec<&SaxWord> = words.iter().map(|w| &w.word).collect();
        distinct.sort();
        distinct.dedup();
        MdlContext {
            total_words: words.len(),
            distinct_words: distinct.len(),
        }
    }
}

/// Every repeated word pattern of length `min_pattern_words` and up.
///
/// Lengths grow one word at a time and the search stops at the first length
/// where nothing repeats. A repeated pattern of length `p + 1` always
/// extends a repeated pattern of length `p`, so only those are extended.
pub fn enumerate_patterns(
    words: &[ModifiedWord],
    min_pattern_words: usize,
) -> Vec<CandidatePattern> {
    let mut ids: HashMap<&SaxWord, u32> = HashMap::new();
    let seq: Vec<u32> = words
        .iter()
        .map(|w| {
            let next = ids.len() as u32;
            *ids.entry(&w.word).or_insert(next)
        })
        .collect();

    let mut groups: Vec<Vec<usize>> = split_by_next(&seq, (0..seq.len()).collect(), 0);
    let mut out = Vec::new();
    let mut p = 1;
    while !groups.is_empty() {
        if p >= min_pattern_words.max(1) {
            out.extend(groups.iter().map(|pos| materialize(words, pos, p)));
        }
        groups = groups
            .into_iter()
            .flat_map(|pos| split_by_next(&seq, pos, p))
            .collect();
        groups.sort_by_key(|g| g[0]);
        p += 1;
    }
    out
}

/// Groups `positions` by the id found `offset` words later, keeping groups
/// with at least two members.
fn split_by_next(seq: &[u32], positions: Vec<usize>, offset: usize) -> Vec<Vec<usize>> {
    let mut by_id: HashMap<u32, Vec<usize>> = HashMap::new();
    for i in positions {
        if let Some(&id) = seq.get(i + offset) {
            by_id.entry(id).or_default().push(i);
        }
    }
    let mut groups: Vec<Vec<usize>> = by_id.into_values().filter(|g| g.len() >= 2).collect();
    groups.sort_by_key(|g| g[0]);
    groups
}

fn materialize(words: &[ModifiedWord], positions: &[usize], p: usize) -> CandidatePattern {
    let first = positions[0];
    CandidatePattern {
        words: words[first..first + p]
            .iter()
            .map(|w| w.word.clone())
            .collect(),
        positions: positions.to_vec(),
        occurrences: positions
            .iter()
            .map(|&i| {
                let start = words[i].start;
                Segment::new(start, words[i + p - 1].end() - start)
            })
            .collect(),
    }
}

fn medoid(alive: &[usize], dm: &DistanceMatrix) -> usize {
    let mut best = alive[0];
    let mut best_sum = f64::INFINITY;
    for &i in alive {
        let s: f64 = alive.iter().map(|&j| dm.get(i, j)).sum();
        if s < best_sum {
            best = i;
            best_sum = s;
        }
    }
    best
}

/// DTW that treats an infeasible band as an infinite distance.
fn motif_distance(a: &[f64], b: &[f64], opts: &DistanceOptions) -> Result<f64> {
    match dtw(a, b, opts) {
        Err(Error::BandInfeasible { .. }) => Ok(f64::INFINITY),
        other => other,
    }
}

/// Keeps the occurrences of `pattern` that lie within `radius` of their
/// medoid.
///
/// The medoid is recomputed after each drop until every remaining
/// occurrence is within the radius of it. Returns `None` when fewer than two
/// occurrences survive. The returned motif has no MDL cost yet.
pub fn radius_filter(
    pattern: &CandidatePattern,
    radius: f64,
    values: &[f64],
    opts: &DistanceOptions,
) -> Result<Option<Motif>> {
    let occ = &pattern.occurrences;
    if occ.len() < 2 {
        return Ok(None);
    }
    for s in occ {
        s.check_within(values.len())?;
    }
    let slice = |s: Segment| &values[s.start..s.end()];
    let dm = DistanceMatrix::build(occ.len(), |i, j| {
        motif_distance(slice(occ[i]), slice(occ[j]), opts)
    })?;

    let mut alive: Vec<usize> = (0..occ.len()).collect();
    let center = loop {
        let c = medoid(&alive, &dm);
        let before = alive.len();
        alive.retain(|&i| dm.get(i, c) <= radius);
        if alive.len() == before {
            break c;
        }
    };
    if alive.len() < 2 {
        return Ok(None);
    }
    Ok(Some(Motif {
        pattern: pattern.words.clone(),
        center: occ[center],
        members: alive
            .iter()
            .map(|&i| Member {
                segment: occ[i],
                distance: dm.get(i, center),
            })
            .collect(),
        mdl_cost: 0.0,
    }))
}

/// Removes overlapping members, keeping the one closer to the center (the
/// earlier one on ties). The center is never removed.
pub fn trivial_prune(motif: Motif) -> Motif {
    let center = motif.center;
    let mut order = motif.members;
    order.sort_by(|a, b| {
        (b.segment == center)
            .cmp(&(a.segment == center))
            .then(a.distance.total_cmp(&b.distance))
            .then(a.segment.start.cmp(&b.segment.start))
    });
    let mut kept: Vec<Member> = Vec::with_capacity(order.len());
    for m in order {
        if kept.iter().all(|k| !k.segment.overlaps(&m.segment)) {
            kept.push(m);
        }
    }
    kept.sort_by_key(|m| m.segment.start);
    Motif {
        members: kept,
        ..motif
    }
}

/// Description length in bits of the word sequence when a pattern of `p`
/// words with `m` non-overlapping occurrences is stored once and each
/// occurrence is replaced by a new symbol:
///
/// `p * log2(A) + (W - m*p + m) * log2(A + 1)`
pub fn mdl_cost(p: usize, m: usize, ctx: &MdlContext) -> Result<f64> {
    let (w, a) = (ctx.total_words, ctx.distinct_words);
    if p == 0 || m < 2 {
        return Err(Error::DegenerateContext(format!(
            "need p >= 1 and m >= 2, got p={p}, m={m}"
        )));
    }
    if a == 0 || a > w || w < m * p {
        return Err(Error::DegenerateContext(format!(
            "W={w}, A={a}, m*p={}",
            m * p
        )));
    }
    let residual = (w - m * p + m) as f64;
    Ok(p as f64 * (a as f64).log2() + residual * ((a + 1) as f64).log2())
}

/// Total order used for ranking: cost, then more members, then earlier
/// center.
pub fn rank_order(a: &Motif, b: &Motif) -> Ordering {
    a.mdl_cost
        .total_cmp(&b.mdl_cost)
        .then(b.members.len().cmp(&a.members.len()))
        .then(a.center.cmp(&b.center))
        .then_with(|| a.pattern.cmp(&b.pattern))
}

/// Output of [`discover`].
#[derive(Debug, Clone)]
pub struct Discovery {
    /// Sorted by [`rank_order`].
    pub motifs: Vec<Motif>,
    pub words: Vec<ModifiedWord>,
    pub context: MdlContext,
    pub pattern_count: usize,
    pub mean: f64,
    pub std: f64,
    /// The series motif distances were measured on.
    pub distance_series: TimeSeries,
}

/// Runs the whole discovery pipeline on `ts`.
pub fn discover(ts: &TimeSeries, cfg: &DiscoveryConfig) -> Result<Discovery> {
    cfg.validate()?;
    if ts.len() < cfg.window_size {
        return Err(Error::SeriesTooShort {
            len: ts.len(),
            needed: cfg.window_size,
        });
    }
    let norm = zscore_global(ts)?;
    let words = modified_sax(norm.series.values(), cfg)?;
    let context = MdlContext::from_words(&words);
    let patterns = enumerate_patterns(&words, cfg.min_pattern_words);
    let distance_series = match cfg.distance_space {
        DistanceSpace::Normalized => norm.series.clone(),
        DistanceSpace::Input => ts.clone(),
    };
    let values = distance_series.values();
    let opts = cfg.distance_options();

    let mut motifs: Vec<Motif> = patterns
        .par_iter()
        .map(|p| -> Result<Option<Motif>> {
            let Some(motif) = radius_filter(p, cfg.radius, values, &opts)? else {
                return Ok(None);
            };
            let mut motif = trivial_prune(motif);
            if motif.members.len() < 2 {
                return Ok(None);
            }
            motif.mdl_cost = match mdl_cost(p.words.len(), motif.members.len(), &context) {
                Ok(c) => c,
                Err(Error::DegenerateContext(_)) => return Ok(None),
                Err(e) => return Err(e),
            };
            Ok(Some(motif))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;
    motifs.sort_by(rank_order);

    Ok(Discovery {
        motifs,
        words,
        context,
        pattern_count: patterns.len(),
        mean: norm.mean,
        std: norm.std,
        distance_series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn mw(words: &[&str]) -> Vec<ModifiedWord> {
        words
            .iter()
            .enumerate()
            .map(|(i, s)| ModifiedWord {
                word: s.parse().unwrap(),
                start: i,
                span: 4,
                run_count: 1,
            })
            .collect()
    }

    fn summary(p: &[CandidatePattern]) -> Vec<(String, usize)> {
        p.iter()
            .map(|c| {
                let w: Vec<String> = c.words.iter().map(|w| w.to_string()).collect();
                (w.join("-"), c.occurrences.len())
            })
            .collect()
    }

    #[test]
    fn enumerate_xyxy() {
        let got = enumerate_patterns(&mw(&["aa", "bb", "aa", "bb"]), 1);
        assert_eq!(
            summary(&got),
            [("aa".into(), 2), ("bb".into(), 2), ("aa-bb".into(), 2)]
        );
        // starts 0 and 2, each two words of span 4 stepping by one sample
        assert_eq!(got[2].occurrences, [Segment::new(0, 5), Segment::new(2, 5)]);
    }

    #[test]
    fn enumerate_abcabd() {
        let got = enumerate_patterns(&mw(&["aa", "bb", "cc", "aa", "bb", "dd"]), 1);
        assert_eq!(
            summary(&got),
            [("aa".into(), 2), ("bb".into(), 2), ("aa-bb".into(), 2)]
        );
        let got = enumerate_patterns(&mw(&["aa", "bb", "cc", "aa", "bb", "dd"]), 2);
        assert_eq!(summary(&got), [("aa-bb".into(), 2)]);
    }

    #[test]
    fn enumerate_distinct_is_empty() {
        assert!(enumerate_patterns(&mw(&["aa", "bb", "cc", "dd"]), 1).is_empty());
        assert!(enumerate_patterns(&[], 1).is_empty());
    }

    /// Brute force: every distinct window of every length with >= 2 hits.
    fn brute_patterns(ids: &[u8]) -> Vec<(Vec<u8>, Vec<usize>)> {
        let mut out = Vec::new();
        for p in 1..=ids.len() {
            let mut seen: Vec<(Vec<u8>, Vec<usize>)> = Vec::new();
            for i in 0..=ids.len() - p {
                let key = ids[i..i + p].to_vec();
                match seen.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, v)) => v.push(i),
                    None => seen.push((key, vec![i])),
                }
            }
            let rep: Vec<_> = seen.into_iter().filter(|(_, v)| v.len() >= 2).collect();
            if rep.is_empty() {
                break;
            }
            out.extend(rep);
        }
        out
    }

    proptest! {
        #[test]
        fn enumerate_matches_brute_force(ids in prop::collection::vec(0u8..3, 1..40)) {
            let names: Vec<String> = ids.iter().map(|i| ["ab", "cd", "ee"][*i as usize].to_string()).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let got = enumerate_patterns(&mw(&refs), 1);
            let mut got: Vec<(Vec<String>, Vec<usize>)> = got
                .into_iter()
                .map(|c| (c.words.iter().map(|w| w.to_string()).collect(), c.positions))
                .collect();
            let mut want: Vec<(Vec<String>, Vec<usize>)> = brute_patterns(&ids)
                .into_iter()
                .map(|(k, v)| (k.iter().map(|i| names[ids.iter().position(|x| x == i).unwrap()].clone()).collect(), v))
                .collect();
            got.sort();
            want.sort();
            prop_assert_eq!(got, want);
        }
    }

    fn pattern_over(occ: &[Segment]) -> CandidatePattern {
        CandidatePattern {
            words: vec!["cc".parse().unwrap()],
            positions: (0..occ.len()).collect(),
            occurrences: occ.to_vec(),
        }
    }

    #[test]
    fn radius_identical_pair() {
        let values = [0.0, 1.0, 0.0, 5.0, 0.0, 1.0, 0.0];
        let p = pattern_over(&[Segment::new(0, 3), Segment::new(4, 3)]);
        let m = radius_filter(&p, 0.1, &values, &DistanceOptions::default())
            .unwrap()
            .unwrap();
        assert_eq!(m.members.len(), 2);
        assert!(m.members.iter().all(|x| x.distance == 0.0));
        assert_eq!(m.center, Segment::new(0, 3));
    }

    #[test]
    fn radius_drops_far_occurrence() {
        // constant blocks at levels 0, 0.05 and 0.5: DTW between constants
        // is the level difference
        let mut values = vec![0.0; 4];
        values.extend([0.05; 4]);
        values.extend([0.5; 4]);
        let p = pattern_over(&[Segment::new(0, 4), Segment::new(4, 4), Segment::new(8, 4)]);
        let m = radius_filter(&p, 0.1, &values, &DistanceOptions::default())
            .unwrap()
            .unwrap();
        let segs: Vec<Segment> = m.segments().collect();
        assert_eq!(segs, [Segment::new(0, 4), Segment::new(4, 4)]);
        assert!(m.members.iter().all(|x| x.distance <= 0.1));
    }

    #[test]
    fn radius_scatter_is_none() {
        let values = [0.0, 0.0, 1.0, 1.0, 2.0, 2.0];
        let p = pattern_over(&[Segment::new(0, 2), Segment::new(2, 2), Segment::new(4, 2)]);
        assert!(radius_filter(&p, 0.1, &values, &DistanceOptions::default())
            .unwrap()
            .is_none());
    }

    fn motif_of(center: Segment, members: &[(usize, usize, f64)]) -> Motif {
        Motif {
            pattern: vec![],
            center,
            members: members
                .iter()
                .map(|&(s, l, d)| Member {
                    segment: Segment::new(s, l),
                    distance: d,
                })
                .collect(),
            mdl_cost: 0.0,
        }
    }

    #[test]
    fn prune_overlapping_pair() {
        let m = trivial_prune(motif_of(
            Segment::new(0, 20),
            &[(0, 20, 0.0), (10, 20, 0.04)],
        ));
        assert_eq!(m.segments().collect::<Vec<_>>(), [Segment::new(0, 20)]);
    }

    #[test]
    fn prune_disjoint_unchanged() {
        let before = motif_of(
            Segment::new(0, 20),
            &[(0, 20, 0.0), (20, 20, 0.04), (50, 5, 0.01)],
        );
        assert_eq!(trivial_prune(before.clone()), before);
    }

    #[test]
    fn prune_chain() {
        let m = trivial_prune(motif_of(
            Segment::new(100, 20),
            &[
                (0, 20, 0.02),
                (15, 20, 0.01),
                (30, 20, 0.03),
                (100, 20, 0.0),
            ],
        ));
        let segs: Vec<Segment> = m.segments().collect();
        assert_eq!(segs, [Segment::new(15, 20), Segment::new(100, 20)]);
    }

    #[test]
    fn prune_keeps_center_even_if_far() {
        let m = trivial_prune(motif_of(Segment::new(5, 10), &[(0, 10, 0.0), (5, 10, 0.0)]));
        assert_eq!(m.segments().collect::<Vec<_>>(), [Segment::new(5, 10)]);
    }

    /// Reference for greedy pruning: among all pairwise disjoint subsets,
    /// the one whose membership vector is lexicographically greatest in
    /// priority order (center first, then distance, then start).
    fn prune_oracle(m: &Motif) -> Vec<Segment> {
        let mut order: Vec<Member> = m.members.clone();
        order.sort_by(|a, b| {
            (b.segment == m.center)
                .cmp(&(a.segment == m.center))
                .then(a.distance.total_cmp(&b.distance))
                .then(a.segment.start.cmp(&b.segment.start))
        });
        let n = order.len();
        let mut best: Option<Vec<bool>> = None;
        for mask in 0u32..(1 << n) {
            let pick: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
            let disjoint = (0..n).all(|i| {
                (i + 1..n)
                    .all(|j| !(pick[i] && pick[j] && order[i].segment.overlaps(&order[j].segment)))
            });
            if disjoint && best.as_ref().is_none_or(|b| pick > *b) {
                best = Some(pick);
            }
        }
        let best = best.unwrap();
        let mut out: Vec<Segment> = (0..n)
            .filter(|&i| best[i])
            .map(|i| order[i].segment)
            .collect();
        out.sort_by_key(|s| s.start);
        out
    }

    proptest! {
        #[test]
        fn prune_matches_oracle(
            raw in prop::collection::vec((0usize..40, 3usize..15, 0u8..5), 1..=5),
        ) {
            let mut members: Vec<(usize, usize, f64)> = raw.iter().map(|&(s, l, d)| (s, l, d as f64 * 0.01)).collect();
            members.sort_by_key(|m| (m.0, m.1));
            members.dedup_by_key(|m| (m.0, m.1));
            let center = Segment::new(members[0].0, members[0].1);
            members[0].2 = 0.0;
            let motif = motif_of(center, &members);
            let pruned = trivial_prune(motif.clone());
            let segs: Vec<Segment> = pruned.segments().collect();
            prop_assert_eq!(&segs, &prune_oracle(&motif));
            prop_assert!(segs.contains(&center));
        }
    }

    #[test]
    fn mdl_examples() {
        let ctx = MdlContext {
            total_words: 10,
            distinct_words: 4,
        };
        // 2*log2(4) + (10 - 6 + 3)*log2(5)
        assert_abs_diff_eq!(
            mdl_cost(2, 3, &ctx).unwrap(),
            20.253_496_664_211_536,
            epsilon = 1e-9
        );
        let whole = MdlContext {
            total_words: 4,
            distinct_words: 2,
        };
        assert!(mdl_cost(4, 1, &whole).is_err());
        assert!(mdl_cost(3, 2, &whole).is_err());
        assert!(mdl_cost(
            2,
            2,
            &MdlContext {
                total_words: 10,
                distinct_words: 0
            }
        )
        .is_err());
        let ctx = MdlContext {
            total_words: 100,
            distinct_words: 12,
        };
        assert!(mdl_cost(3, 4, &ctx).unwrap() < mdl_cost(3, 2, &ctx).unwrap());
    }

    proptest! {
        #[test]
        fn mdl_decreases_with_support(p in 2usize..6, m in 2usize..10, extra in 0usize..50, a in 1usize..20) {
            let w = (m + 1) * p + extra + a;
            let ctx = MdlContext { total_words: w, distinct_words: a };
            prop_assert!(mdl_cost(p, m + 1, &ctx).unwrap() < mdl_cost(p, m, &ctx).unwrap());
        }
    }

    #[test]
    fn context_counts_distinct() {
        let ctx = MdlContext::from_words(&mw(&["aa", "bb", "aa", "cc", "aa"]));
        assert_eq!(
            ctx,
            MdlContext {
                total_words: 5,
                distinct_words: 3
            }
        );
    }
}
